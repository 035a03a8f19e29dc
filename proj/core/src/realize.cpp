#include "arcdiag/realize.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

namespace {

int resolve_threads(int threads) {
    if (threads > 0) {
        return threads;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<int> chord_owner(const ChordDiagram& diagram) {
    std::vector<int> owner(diagram.point_count());
    const std::vector<Chord> chords = diagram.chords();
    for (int v = 0; v < static_cast<int>(chords.size()); ++v) {
        owner[chords[v].a] = v;
        owner[chords[v].b] = v;
    }
    return owner;
}

/// Gap g carries dart 2g (point g toward point g+1) and dart 2g+1 (the
/// reverse). The four darts leaving the vertex of chord (x, y) are the
/// forward darts at x and y plus the reverses of the preceding gaps. The two
/// transverse interleavings at a vertex alternate the x passage (backward_x,
/// forward_x) with the y passage:
///   choice 0: backward_x, backward_y, forward_x, forward_y
///   choice 1: backward_x, forward_y, forward_x, backward_y
void build_sigma(const std::vector<Chord>& chords, int points,
                 const std::vector<std::uint8_t>& choices, std::vector<int>& sigma) {
    sigma.resize(2 * points);
    for (size_t v = 0; v < chords.size(); ++v) {
        const int x = chords[v].a;
        const int y = chords[v].b;
        const int fx = 2 * x;
        const int bx = 2 * ((x + points - 1) % points) + 1;
        const int fy = 2 * y;
        const int by = 2 * ((y + points - 1) % points) + 1;
        if (choices[v] == 0) {
            sigma[bx] = by;
            sigma[by] = fx;
            sigma[fx] = fy;
            sigma[fy] = bx;
        } else {
            sigma[bx] = fy;
            sigma[fy] = fx;
            sigma[fx] = by;
            sigma[by] = bx;
        }
    }
}

/// Orbits of dart -> sigma[dart ^ 1] are the faces.
int count_faces(const std::vector<int>& sigma, std::vector<std::uint8_t>& visited) {
    const int darts = static_cast<int>(sigma.size());
    visited.assign(darts, 0);
    int faces = 0;
    for (int start = 0; start < darts; ++start) {
        if (visited[start]) {
            continue;
        }
        ++faces;
        int d = start;
        do {
            visited[d] = 1;
            d = sigma[d ^ 1];
        } while (d != start);
    }
    return faces;
}

void check_choices(const ChordDiagram& diagram, const RotationSystem& rotations) {
    if (static_cast<int>(rotations.choices.size()) != diagram.chord_count()) {
        throw Error(ErrorKind::BadLength,
                    "expected one rotation choice per chord, got " +
                        std::to_string(rotations.choices.size()) + " for " +
                        std::to_string(diagram.chord_count()) + " chords");
    }
    if (diagram.empty()) {
        throw Error(ErrorKind::EmptyDiagram, "the empty diagram has no crossings to embed");
    }
}

}  // namespace

QuotientGraph quotient_graph(const ChordDiagram& diagram) {
    if (diagram.empty()) {
        throw Error(ErrorKind::EmptyDiagram, "the empty diagram has no quotient vertices");
    }
    QuotientGraph graph;
    graph.vertex_count = diagram.chord_count();
    const std::vector<int> owner = chord_owner(diagram);
    const int points = diagram.point_count();
    graph.edges.reserve(points);
    for (int g = 0; g < points; ++g) {
        graph.edges.emplace_back(owner[g], owner[(g + 1) % points]);
    }
    return graph;
}

bool graph_is_g2n1(const QuotientGraph& graph, int n) {
    if (n < 2) {
        throw Error(ErrorKind::TooSmall,
                    "the cycle-plus-step-3 family degenerates below n = 2, got " +
                        std::to_string(n));
    }
    const int k = 2 * n + 1;
    if (graph.vertex_count != k || static_cast<int>(graph.edges.size()) != 2 * k) {
        return false;
    }
    std::set<std::pair<int, int>> edge_set;
    std::vector<int> degree(k, 0);
    for (const auto& [a, b] : graph.edges) {
        if (a == b) {
            return false;
        }
        if (!edge_set.emplace(std::min(a, b), std::max(a, b)).second) {
            return false;
        }
        ++degree[a];
        ++degree[b];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 4; })) {
        return false;
    }
    const auto adjacent = [&](int a, int b) {
        return edge_set.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    // Label vertices u_0..u_{k-1} so that consecutive labels and labels three
    // apart are adjacent. The 2k required pairs are pairwise distinct for odd
    // k >= 5, and the graph is simple with exactly 2k edges, so a successful
    // labelling matches the edge set exactly. Vertex transitivity of the
    // target lets u_0 stay fixed at vertex 0.
    std::vector<int> label(k, -1);
    std::vector<std::uint8_t> used(k, 0);
    label[0] = 0;
    used[0] = 1;
    const auto place = [&](const auto& self, int i) -> bool {
        if (i == k) {
            return adjacent(label[k - 1], label[0]) && adjacent(label[k - 3], label[0]) &&
                   adjacent(label[k - 2], label[1]) && adjacent(label[k - 1], label[2]);
        }
        for (int v = 0; v < k; ++v) {
            if (used[v] || !adjacent(label[i - 1], v) || (i >= 3 && !adjacent(label[i - 3], v))) {
                continue;
            }
            label[i] = v;
            used[v] = 1;
            if (self(self, i + 1)) {
                return true;
            }
            used[v] = 0;
            label[i] = -1;
        }
        return false;
    };
    return place(place, 1);
}

bool parity_filter(const ChordDiagram& diagram) {
    const InterlacementGraph graph = interlacement_graph(diagram);
    for (int i = 0; i < graph.chord_count; ++i) {
        if (graph.degree(i) % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> trace_faces(const ChordDiagram& diagram,
                                          const RotationSystem& rotations) {
    check_choices(diagram, rotations);
    std::vector<int> sigma;
    build_sigma(diagram.chords(), diagram.point_count(), rotations.choices, sigma);
    std::vector<std::vector<int>> faces;
    std::vector<std::uint8_t> visited(sigma.size(), 0);
    for (int start = 0; start < static_cast<int>(sigma.size()); ++start) {
        if (visited[start]) {
            continue;
        }
        std::vector<int> face;
        int d = start;
        do {
            visited[d] = 1;
            face.push_back(d);
            d = sigma[d ^ 1];
        } while (d != start);
        faces.push_back(std::move(face));
    }
    return faces;
}

int face_count(const ChordDiagram& diagram, const RotationSystem& rotations) {
    check_choices(diagram, rotations);
    std::vector<int> sigma;
    build_sigma(diagram.chords(), diagram.point_count(), rotations.choices, sigma);
    std::vector<std::uint8_t> visited;
    return count_faces(sigma, visited);
}

int genus_of(const ChordDiagram& diagram, const RotationSystem& rotations) {
    return (2 + diagram.chord_count() - face_count(diagram, rotations)) / 2;
}

GenusSearch genus_min(const ChordDiagram& diagram, int guard, int threads) {
    if (diagram.empty()) {
        throw Error(ErrorKind::EmptyDiagram, "the empty diagram has no crossings to embed");
    }
    const int m = diagram.chord_count();
    if (m > guard) {
        throw Error(ErrorKind::GuardExceeded, "rotation search over 2^" + std::to_string(m) +
                        " assignments exceeds guard " + std::to_string(guard));
    }
    const std::vector<Chord> chords = diagram.chords();
    const int points = diagram.point_count();
    const std::uint64_t total = std::uint64_t{1} << m;

    struct Best {
        int genus = -1;
        std::uint64_t mask = 0;
    };
    const auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) {
        Best best;
        std::vector<std::uint8_t> choices(m);
        std::vector<int> sigma;
        std::vector<std::uint8_t> visited;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            for (int v = 0; v < m; ++v) {
                choices[v] = static_cast<std::uint8_t>((mask >> v) & 1);
            }
            build_sigma(chords, points, choices, sigma);
            const int genus = (2 + m - count_faces(sigma, visited)) / 2;
            if (best.genus == -1 || genus < best.genus) {
                best = Best{genus, mask};
                if (genus == 0) {
                    break;
                }
            }
        }
        return best;
    };

    const int workers = static_cast<int>(
        std::min<std::uint64_t>(resolve_threads(threads), total));
    std::vector<Best> bests(workers);
    if (workers <= 1) {
        bests[0] = scan_range(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            const std::uint64_t lo = chunk * t;
            const std::uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { bests[t] = scan_range(lo, hi); });
        }
        for (std::thread& worker : pool) {
            worker.join();
        }
    }
    // Ranges ascend, each keeps its first minimum, so the merged winner is
    // the least mask achieving the least genus regardless of thread count.
    Best winner;
    for (const Best& candidate : bests) {
        if (candidate.genus == -1) {
            continue;
        }
        if (winner.genus == -1 || candidate.genus < winner.genus) {
            winner = candidate;
        }
    }
    GenusSearch result;
    result.genus = winner.genus;
    result.witness.choices.resize(m);
    for (int v = 0; v < m; ++v) {
        result.witness.choices[v] = static_cast<std::uint8_t>((winner.mask >> v) & 1);
    }
    return result;
}

bool is_planar_realizable(const ChordDiagram& diagram, int guard, int threads) {
    if (diagram.empty()) {
        return true;
    }
    return genus_min(diagram, guard, threads).genus == 0;
}

}  // namespace arcdiag
