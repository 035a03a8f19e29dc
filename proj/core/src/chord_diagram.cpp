#include "arcdiag/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace arcdiag {

namespace {

int mod(int value, int modulus) {
    int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

}  // namespace

ChordDiagram ChordDiagram::from_pairing(std::span<const int> pairing) {
    const int n = static_cast<int>(pairing.size());
    if (n % 2 != 0) {
        throw Error(ErrorKind::BadLength, "pairing has odd length " + std::to_string(n));
    }
    ChordDiagram diagram;
    diagram.pairing_.assign(pairing.begin(), pairing.end());
    for (int i = 0; i < n; ++i) {
        const int p = diagram.pairing_[i];
        if (p < 0 || p >= n) {
            throw Error(ErrorKind::OutOfRange,
                        "partner " + std::to_string(p) + " of point " + std::to_string(i) +
                            " not in [0," + std::to_string(n) + ")",
                        i);
        }
        if (p == i) {
            throw Error(ErrorKind::FixedPoint, "point " + std::to_string(i) + " pairs with itself",
                        i);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (diagram.pairing_[diagram.pairing_[i]] != i) {
            throw Error(ErrorKind::NotInvolution,
                        "pairing is not an involution at point " + std::to_string(i), i);
        }
    }
    return diagram;
}

ChordDiagram ChordDiagram::from_gauss_word(std::span<const std::string> word) {
    const int n = static_cast<int>(word.size());
    if (n % 2 != 0) {
        throw Error(ErrorKind::BadLength, "word has odd length " + std::to_string(n));
    }
    std::map<std::string, std::vector<int>> positions;
    for (int i = 0; i < n; ++i) {
        positions[word[i]].push_back(i);
    }
    for (int i = 0; i < n; ++i) {
        const auto& occ = positions[word[i]];
        if (occ.size() != 2) {
            throw Error(ErrorKind::BadMultiplicity,
                        "label '" + word[i] + "' occurs " + std::to_string(occ.size()) +
                            " times, expected 2",
                        i);
        }
    }
    std::vector<int> pairing(n);
    for (const auto& [label, occ] : positions) {
        pairing[occ[0]] = occ[1];
        pairing[occ[1]] = occ[0];
    }
    ChordDiagram diagram;
    diagram.pairing_ = std::move(pairing);
    return diagram;
}

ChordDiagram ChordDiagram::from_chords(std::span<const Chord> chords, int point_count) {
    if (point_count != 2 * static_cast<int>(chords.size())) {
        throw Error(ErrorKind::BadLength,
                    std::to_string(chords.size()) + " chords cannot cover " +
                        std::to_string(point_count) + " points");
    }
    std::vector<int> pairing(point_count, -1);
    for (size_t idx = 0; idx < chords.size(); ++idx) {
        const Chord c = chords[idx];
        for (int endpoint : {c.a, c.b}) {
            if (endpoint < 0 || endpoint >= point_count) {
                throw Error(ErrorKind::OutOfRange,
                            "endpoint " + std::to_string(endpoint) + " not in [0," +
                                std::to_string(point_count) + ")",
                            static_cast<long long>(idx));
            }
        }
        if (c.a == c.b) {
            throw Error(ErrorKind::FixedPoint, "chord joins point " + std::to_string(c.a) +
                            " to itself",
                        static_cast<long long>(idx));
        }
        for (int endpoint : {c.a, c.b}) {
            if (pairing[endpoint] != -1) {
                throw Error(ErrorKind::DuplicatePoint,
                            "point " + std::to_string(endpoint) + " used by two chords",
                            static_cast<long long>(idx));
            }
        }
        pairing[c.a] = c.b;
        pairing[c.b] = c.a;
    }
    ChordDiagram diagram;
    diagram.pairing_ = std::move(pairing);
    return diagram;
}

int ChordDiagram::partner(int point) const {
    if (point < 0 || point >= point_count()) {
        throw Error(ErrorKind::OutOfRange, "point " + std::to_string(point) + " not in [0," +
                        std::to_string(point_count()) + ")",
                    point);
    }
    return pairing_[point];
}

std::vector<Chord> ChordDiagram::chords() const {
    std::vector<Chord> result;
    result.reserve(chord_count());
    for (int i = 0; i < point_count(); ++i) {
        if (i < pairing_[i]) {
            result.push_back(Chord{i, pairing_[i]});
        }
    }
    return result;
}

Chord ChordDiagram::chord_at(int point) const {
    return make_chord(point, partner(point));
}

bool ChordDiagram::has_chord(Chord chord) const {
    if (chord.a < 0 || chord.a >= point_count()) {
        return false;
    }
    return pairing_[chord.a] == chord.b;
}

ChordDiagram rotate(const ChordDiagram& diagram, int k) {
    const int n = diagram.point_count();
    if (n == 0) {
        return diagram;
    }
    k = mod(k, n);
    std::vector<int> rotated(n);
    const auto& pairing = diagram.pairing();
    for (int i = 0; i < n; ++i) {
        rotated[(i + k) % n] = (pairing[i] + k) % n;
    }
    return ChordDiagram::from_pairing(rotated);
}

ChordDiagram reflect(const ChordDiagram& diagram) {
    const int n = diagram.point_count();
    if (n == 0) {
        return diagram;
    }
    std::vector<int> reflected(n);
    const auto& pairing = diagram.pairing();
    for (int i = 0; i < n; ++i) {
        reflected[(n - i) % n] = (n - pairing[i]) % n;
    }
    return ChordDiagram::from_pairing(reflected);
}

CanonicalCode canonical_code(const ChordDiagram& diagram) {
    const int n = diagram.point_count();
    CanonicalCode result;
    if (n == 0) {
        return result;
    }
    std::vector<int> word(n);
    const auto& pairing = diagram.pairing();
    for (int i = 0; i < n; ++i) {
        word[i] = mod(pairing[i] - i, n);
    }
    const int start = detail::least_rotation_booth(word);
    result.code.resize(n);
    for (int i = 0; i < n; ++i) {
        result.code[i] = word[(start + i) % n];
    }
    return result;
}

ChordDiagram diagram_of_code(const CanonicalCode& code) {
    const int n = static_cast<int>(code.code.size());
    std::vector<int> pairing(n);
    for (int i = 0; i < n; ++i) {
        pairing[i] = (i + code.code[i]) % n;
    }
    return ChordDiagram::from_pairing(pairing);
}

bool equivalent(const ChordDiagram& lhs, const ChordDiagram& rhs, bool dihedral) {
    if (lhs.point_count() != rhs.point_count()) {
        return false;
    }
    const CanonicalCode lc = canonical_code(lhs);
    if (lc == canonical_code(rhs)) {
        return true;
    }
    return dihedral && lc == canonical_code(reflect(rhs));
}

bool crosses(Chord lhs, Chord rhs) {
    lhs = make_chord(lhs.a, lhs.b);
    rhs = make_chord(rhs.a, rhs.b);
    if (lhs.a == rhs.a || lhs.a == rhs.b || lhs.b == rhs.a || lhs.b == rhs.b) {
        return false;
    }
    const bool a_inside = lhs.a < rhs.a && rhs.a < lhs.b;
    const bool b_inside = lhs.a < rhs.b && rhs.b < lhs.b;
    return a_inside != b_inside;
}

int chord_length(const ChordDiagram& diagram, Chord chord) {
    chord = make_chord(chord.a, chord.b);
    if (!diagram.has_chord(chord)) {
        throw Error(ErrorKind::NotAChord, "no chord joins " + std::to_string(chord.a) + " and " +
                        std::to_string(chord.b));
    }
    const int n = diagram.point_count();
    const int d = chord.b - chord.a;
    return std::min(d, n - d);
}

ChordDiagram sub_diagram(const ChordDiagram& diagram, std::span<const Chord> keep) {
    const int n = diagram.point_count();
    std::vector<int> kept_points;
    kept_points.reserve(2 * keep.size());
    std::vector<uint8_t> seen(n, 0);
    for (size_t idx = 0; idx < keep.size(); ++idx) {
        const Chord c = make_chord(keep[idx].a, keep[idx].b);
        if (!diagram.has_chord(c)) {
            throw Error(ErrorKind::NotAChord,
                        "no chord joins " + std::to_string(c.a) + " and " + std::to_string(c.b),
                        static_cast<long long>(idx));
        }
        for (int endpoint : {c.a, c.b}) {
            if (seen[endpoint]) {
                throw Error(ErrorKind::DuplicatePoint, "chord list repeats point " +
                                std::to_string(endpoint),
                            static_cast<long long>(idx));
            }
            seen[endpoint] = 1;
            kept_points.push_back(endpoint);
        }
    }
    std::sort(kept_points.begin(), kept_points.end());
    std::vector<int> rank(n, -1);
    for (size_t r = 0; r < kept_points.size(); ++r) {
        rank[kept_points[r]] = static_cast<int>(r);
    }
    std::vector<int> pairing(kept_points.size());
    const auto& full = diagram.pairing();
    for (int point : kept_points) {
        pairing[rank[point]] = rank[full[point]];
    }
    return ChordDiagram::from_pairing(pairing);
}

ChordDiagram delete_chord(const ChordDiagram& diagram, Chord chord) {
    chord = make_chord(chord.a, chord.b);
    if (!diagram.has_chord(chord)) {
        throw Error(ErrorKind::NotAChord, "no chord joins " + std::to_string(chord.a) + " and " +
                        std::to_string(chord.b));
    }
    std::vector<Chord> keep;
    keep.reserve(diagram.chord_count() - 1);
    for (const Chord& c : diagram.chords()) {
        if (c != chord) {
            keep.push_back(c);
        }
    }
    return sub_diagram(diagram, keep);
}

InterlacementGraph interlacement_graph(const ChordDiagram& diagram) {
    InterlacementGraph graph;
    graph.chord_count = diagram.chord_count();
    graph.adj.assign(graph.chord_count, std::vector<uint8_t>(graph.chord_count, 0));
    const std::vector<Chord> chords = diagram.chords();
    for (int i = 0; i < graph.chord_count; ++i) {
        for (int j = i + 1; j < graph.chord_count; ++j) {
            if (crosses(chords[i], chords[j])) {
                graph.adj[i][j] = graph.adj[j][i] = 1;
            }
        }
    }
    return graph;
}

int InterlacementGraph::degree(int chord_index) const {
    if (chord_index < 0 || chord_index >= chord_count) {
        throw Error(ErrorKind::OutOfRange, "chord index " + std::to_string(chord_index) +
                        " not in [0," + std::to_string(chord_count) + ")",
                    chord_index);
    }
    int d = 0;
    for (uint8_t bit : adj[chord_index]) {
        d += bit;
    }
    return d;
}

namespace detail {

int least_rotation_booth(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) {
        return 0;
    }
    std::vector<int> failure(2 * n, -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        const int sj = word[j % n];
        int i = failure[j - k - 1];
        while (i != -1 && sj != word[(k + i + 1) % n]) {
            if (sj < word[(k + i + 1) % n]) {
                k = j - i - 1;
            }
            i = failure[i];
        }
        if (sj != word[(k + i + 1) % n]) {
            if (sj < word[k % n]) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    return k;
}

int least_rotation_scan(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) {
        return 0;
    }
    int best = 0;
    for (int start = 1; start < n; ++start) {
        for (int offset = 0; offset < n; ++offset) {
            const int lhs = word[(start + offset) % n];
            const int rhs = word[(best + offset) % n];
            if (lhs != rhs) {
                if (lhs < rhs) {
                    best = start;
                }
                break;
            }
        }
    }
    return best;
}

}  // namespace detail

}  // namespace arcdiag
