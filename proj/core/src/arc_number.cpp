#include "arcdiag/arc_number.hpp"

#include <algorithm>
#include <limits>

namespace arcdiag {

namespace {

/// Greedy scan with an initial cut at gap `start`, extending every block as
/// far as possible. Returns the block count; optimal among partitions that
/// cut at `start`, since delaying a forced cut never helps. With `out_cuts`
/// records the cut gaps in scan order.
int greedy_from(const ChordDiagram& diagram, int start, std::vector<int>* out_cuts) {
    const int n = diagram.point_count();
    const auto& pairing = diagram.pairing();
    std::vector<int> block_of(n, -1);
    if (out_cuts) {
        out_cuts->clear();
        out_cuts->push_back(start);
    }
    int block_id = 0;
    for (int step = 1; step <= n; ++step) {
        const int p = (start + step) % n;
        if (block_of[pairing[p]] == block_id) {
            if (out_cuts) {
                out_cuts->push_back((p - 1 + n) % n);
            }
            ++block_id;
        }
        block_of[p] = block_id;
    }
    return block_id + 1;
}

void check_cuts(const ChordDiagram& diagram, const std::vector<int>& cuts) {
    const int n = diagram.point_count();
    if (cuts.empty()) {
        throw Error(ErrorKind::EmptyCutSet, "a partition needs at least one cut");
    }
    std::vector<uint8_t> seen(n, 0);
    for (size_t i = 0; i < cuts.size(); ++i) {
        const int g = cuts[i];
        if (g < 0 || g >= n) {
            throw Error(ErrorKind::OutOfRange, "cut gap " + std::to_string(g) + " not in [0," +
                            std::to_string(n) + ")",
                        static_cast<long long>(i));
        }
        if (seen[g]) {
            throw Error(ErrorKind::DuplicatePoint, "cut gap " + std::to_string(g) + " repeated",
                        static_cast<long long>(i));
        }
        seen[g] = 1;
    }
}

}  // namespace

bool is_valid_partition(const ChordDiagram& diagram, const ArcPartition& partition) {
    if (diagram.empty()) {
        return true;
    }
    check_cuts(diagram, partition.cuts);
    std::vector<int> cuts = partition.cuts;
    std::sort(cuts.begin(), cuts.end());
    const int k = static_cast<int>(cuts.size());
    // Cut g separates point g from g+1, so block j holds points c_{j-1}+1..c_j
    // and points past the last cut wrap into block 0.
    const auto block = [&](int p) {
        const auto it = std::lower_bound(cuts.begin(), cuts.end(), p);
        const int b = static_cast<int>(it - cuts.begin());
        return b == k ? 0 : b;
    };
    const auto& pairing = diagram.pairing();
    for (int p = 0; p < diagram.point_count(); ++p) {
        if (p < pairing[p] && block(p) == block(pairing[p])) {
            return false;
        }
    }
    return true;
}

int arc_number(const ChordDiagram& diagram) {
    if (diagram.empty()) {
        return 1;
    }
    const int n = diagram.point_count();
    int best = std::numeric_limits<int>::max();
    for (int start = 0; start < n; ++start) {
        best = std::min(best, greedy_from(diagram, start, nullptr));
        if (best == 2) {
            break;
        }
    }
    return best;
}

int arc_number_bruteforce(const ChordDiagram& diagram, int guard) {
    if (diagram.empty()) {
        return 1;
    }
    if (diagram.chord_count() > guard) {
        throw Error(ErrorKind::GuardExceeded,
                    "exhaustive arc search over " + std::to_string(diagram.chord_count()) +
                        " chords exceeds guard " + std::to_string(guard));
    }
    const int n = diagram.point_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> cuts(k);
        for (int i = 0; i < k; ++i) {
            cuts[i] = i;
        }
        while (true) {
            if (is_valid_partition(diagram, ArcPartition{cuts})) {
                return k;
            }
            int i = k - 1;
            while (i >= 0 && cuts[i] == n - k + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++cuts[i];
            for (int j = i + 1; j < k; ++j) {
                cuts[j] = cuts[j - 1] + 1;
            }
        }
    }
    return n;
}

ArcPartition min_partition(const ChordDiagram& diagram) {
    if (diagram.empty()) {
        throw Error(ErrorKind::EmptyDiagram, "the empty diagram has no cuts to choose");
    }
    const int n = diagram.point_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_cuts;
    std::vector<int> cuts;
    for (int start = 0; start < n; ++start) {
        const int blocks = greedy_from(diagram, start, &cuts);
        if (blocks < best) {
            best = blocks;
            best_cuts = cuts;
            if (best == 2) {
                break;
            }
        }
    }
    std::sort(best_cuts.begin(), best_cuts.end());
    return ArcPartition{std::move(best_cuts)};
}

std::optional<CuttingPair> find_cutting_pair(const ChordDiagram& diagram) {
    return scan_cutting_pairs(diagram).pair;
}

CuttingPairScan scan_cutting_pairs(const ChordDiagram& diagram) {
    if (diagram.empty()) {
        throw Error(ErrorKind::EmptyDiagram, "the empty diagram has no gaps to cut");
    }
    const int m = diagram.chord_count();
    const int n = diagram.point_count();
    const auto& pairing = diagram.pairing();
    CuttingPairScan scan;
    // Cutting at gaps g and h splits the circle into two runs of points; a
    // valid pair splits every chord, forcing m points per side, so g and h
    // are antipodal. Only the m pairs (i, i+m) can ever work.
    for (int i = 0; i < m; ++i) {
        ++scan.pairs_examined;
        const auto in_near_side = [&](int x) { return (x - i - 1 + n) % n < m; };
        bool all_split = true;
        for (int p = 0; p < n && all_split; ++p) {
            if (p < pairing[p] && in_near_side(p) == in_near_side(pairing[p])) {
                all_split = false;
            }
        }
        if (all_split) {
            scan.pair = CuttingPair{i, i + m};
            break;
        }
    }
    return scan;
}

}  // namespace arcdiag
