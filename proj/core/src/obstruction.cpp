#include "arcdiag/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "arcdiag/arc_number.hpp"

namespace arcdiag {

ChordDiagram make_c(int n) {
    if (n < 1) {
        throw Error(ErrorKind::TooSmall, "the family starts at n = 1, got " + std::to_string(n));
    }
    const int points = 4 * n + 2;
    std::vector<Chord> chords;
    chords.reserve(2 * n + 1);
    for (int i = 0; i <= 2 * n; ++i) {
        chords.push_back(make_chord(2 * i, (2 * i + 2 * n - 1) % points));
    }
    return ChordDiagram::from_chords(chords, points);
}

std::optional<int> is_c_odd(const ChordDiagram& diagram) {
    const int m = diagram.chord_count();
    if (m < 3 || m % 2 == 0) {
        return std::nullopt;
    }
    const int n = (m - 1) / 2;
    if (equivalent(diagram, make_c(n))) {
        return n;
    }
    return std::nullopt;
}

bool satisfies_star(const ChordDiagram& diagram) {
    const int m = diagram.chord_count();
    if (m < 3) {
        throw Error(ErrorKind::TooSmall,
                    "no chord of a " + std::to_string(m) + "-chord diagram can have length " +
                        std::to_string(m) + " - 2");
    }
    for (const Chord& c : diagram.chords()) {
        if (chord_length(diagram, c) != m - 2) {
            return false;
        }
    }
    return true;
}

bool is_minimal_obstruction(const ChordDiagram& diagram) {
    if (arc_number(diagram) < 3) {
        return false;
    }
    for (const Chord& c : diagram.chords()) {
        if (arc_number(delete_chord(diagram, c)) > 2) {
            return false;
        }
    }
    return true;
}

StarClassification classify_star(const ChordDiagram& diagram) {
    if (!satisfies_star(diagram)) {
        throw Error(ErrorKind::StarViolated, "some chord does not have length m - 2");
    }
    const int m = diagram.chord_count();
    if (m % 4 == 2) {
        throw Error(ErrorKind::ImpossibleParity,
                    "no diagram with m = " + std::to_string(m) +
                        " = 2 mod 4 chords can have all lengths m - 2");
    }
    if (m % 2 == 0) {
        if (arc_number(diagram) != 2) {
            throw std::logic_error("diagram with all chord lengths m - 2 and m = 0 mod 4 "
                                   "must have arc number 2");
        }
        return StarClassification{StarClass::ArcTwo, 0};
    }
    const int n = (m - 1) / 2;
    if (!equivalent(diagram, make_c(n))) {
        throw std::logic_error("diagram with all chord lengths m - 2 and odd m must be "
                               "equivalent to C_m");
    }
    return StarClassification{StarClass::EquivalentToCm, n};
}

CirculantGraph circulant(int m) {
    if (m < 3) {
        throw Error(ErrorKind::TooSmall, "step m - 2 needs m >= 3, got " + std::to_string(m));
    }
    CirculantGraph graph;
    graph.vertices = 2 * m;
    graph.step = m - 2;
    graph.edges.reserve(graph.vertices);
    for (int i = 0; i < graph.vertices; ++i) {
        const int j = (i + graph.step) % graph.vertices;
        graph.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

std::vector<std::vector<int>> cycle_components(const CirculantGraph& graph) {
    std::vector<std::vector<int>> components;
    std::vector<uint8_t> visited(graph.vertices, 0);
    for (int start = 0; start < graph.vertices; ++start) {
        if (visited[start]) {
            continue;
        }
        std::vector<int> cycle;
        int v = start;
        do {
            visited[v] = 1;
            cycle.push_back(v);
            v = (v + graph.step) % graph.vertices;
        } while (v != start);
        components.push_back(std::move(cycle));
    }
    return components;
}

std::vector<ChordDiagram> enumerate_star_diagrams(int m) {
    const CirculantGraph graph = circulant(m);
    const int v = graph.vertices;
    std::vector<std::vector<int>> neighbours(v);
    for (const auto& [a, b] : graph.edges) {
        neighbours[a].push_back(b);
        neighbours[b].push_back(a);
    }
    for (auto& list : neighbours) {
        std::sort(list.begin(), list.end());
    }
    std::vector<ChordDiagram> results;
    std::vector<int> matched(v, -1);
    std::vector<Chord> picked;
    const auto recurse = [&](const auto& self, int from) -> void {
        int u = from;
        while (u < v && matched[u] != -1) {
            ++u;
        }
        if (u == v) {
            results.push_back(ChordDiagram::from_chords(picked, v));
            return;
        }
        for (int w : neighbours[u]) {
            if (matched[w] != -1) {
                continue;
            }
            matched[u] = w;
            matched[w] = u;
            picked.push_back(make_chord(u, w));
            self(self, u + 1);
            picked.pop_back();
            matched[u] = -1;
            matched[w] = -1;
        }
    };
    recurse(recurse, 0);
    return results;
}

std::optional<ObstructionWitness> find_obstruction(const ChordDiagram& diagram) {
    if (arc_number(diagram) <= 2) {
        return std::nullopt;
    }
    std::vector<Chord> kept = diagram.chords();
    bool deleted = true;
    while (deleted) {
        deleted = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Chord> trial = kept;
            trial.erase(trial.begin() + static_cast<long>(i));
            if (arc_number(sub_diagram(diagram, trial)) >= 3) {
                kept = std::move(trial);
                deleted = true;
                break;
            }
        }
    }
    const ChordDiagram witness = sub_diagram(diagram, kept);
    const std::optional<int> n = is_c_odd(witness);
    if (!n) {
        throw std::logic_error("a chord-deletion-minimal diagram of arc number >= 3 must be "
                               "equivalent to some C_{2n+1}");
    }
    return ObstructionWitness{std::move(kept), *n};
}

bool contains_obstruction(const ChordDiagram& diagram, int n, int guard, bool prune) {
    if (n < 1) {
        throw Error(ErrorKind::TooSmall, "the family starts at n = 1, got " + std::to_string(n));
    }
    const int m = diagram.chord_count();
    if (m > guard) {
        throw Error(ErrorKind::GuardExceeded,
                    "subset search over " + std::to_string(m) + " chords exceeds guard " +
                        std::to_string(guard));
    }
    const int k = 2 * n + 1;
    if (k > m) {
        return false;
    }
    std::vector<Chord> candidates;
    for (const Chord& c : diagram.chords()) {
        if (!prune || chord_length(diagram, c) >= 2 * n - 1) {
            candidates.push_back(c);
        }
    }
    const int pool = static_cast<int>(candidates.size());
    if (k > pool) {
        return false;
    }
    const CanonicalCode target = canonical_code(make_c(n));
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Chord> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) {
            subset[i] = candidates[idx[i]];
        }
        if (canonical_code(sub_diagram(diagram, subset)) == target) {
            return true;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == pool - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace arcdiag
