#include "arcdiag/curves.hpp"

#include <map>
#include <string>

#include "arcdiag/arc_number.hpp"
#include "arcdiag/obstruction.hpp"
#include "arcdiag/realize.hpp"

#include "json.hpp"

namespace arcdiag {

namespace {

Chord checked_chord(const ChordDiagram& diagram, Chord chord) {
    chord = make_chord(chord.a, chord.b);
    if (!diagram.has_chord(chord)) {
        throw Error(ErrorKind::NotAChord, "no chord joins " + std::to_string(chord.a) + " and " +
                        std::to_string(chord.b));
    }
    return chord;
}

}  // namespace

bool parallel(const ChordDiagram& diagram, Chord lhs, Chord rhs) {
    lhs = checked_chord(diagram, lhs);
    rhs = checked_chord(diagram, rhs);
    return !crosses(lhs, rhs);
}

bool next_to(const ChordDiagram& diagram, int p, int q) {
    const int n = diagram.point_count();
    for (int point : {p, q}) {
        if (point < 0 || point >= n) {
            throw Error(ErrorKind::OutOfRange, "point " + std::to_string(point) + " not in [0," +
                            std::to_string(n) + ")",
                        point);
        }
    }
    if (p == q) {
        return false;
    }
    return (p + 1) % n == q || (q + 1) % n == p;
}

bool close_chords(const ChordDiagram& diagram, Chord lhs, Chord rhs) {
    lhs = checked_chord(diagram, lhs);
    rhs = checked_chord(diagram, rhs);
    return (next_to(diagram, lhs.a, rhs.a) && next_to(diagram, lhs.b, rhs.b)) ||
           (next_to(diagram, lhs.a, rhs.b) && next_to(diagram, lhs.b, rhs.a));
}

TwinDoubleResult twin_double(const ChordDiagram& diagram) {
    // Walking counterclockwise, each original point p becomes two points; the
    // twin endpoint sits immediately counterclockwise of a chord's smaller
    // endpoint and immediately clockwise of its larger one, so the smaller
    // endpoint maps to 2p with its twin at 2p+1, and the larger to 2p+1 with
    // its twin at 2p.
    TwinDoubleResult result;
    std::vector<Chord> chords;
    chords.reserve(2 * diagram.chord_count());
    for (const Chord& c : diagram.chords()) {
        const Chord original = make_chord(2 * c.a, 2 * c.b + 1);
        const Chord twin = make_chord(2 * c.a + 1, 2 * c.b);
        chords.push_back(original);
        chords.push_back(twin);
        result.twins.emplace_back(original, twin);
    }
    result.diagram = ChordDiagram::from_chords(chords, 2 * diagram.point_count());
    return result;
}

GaussWordFB forward_back_word(int n) {
    if (n < 2) {
        throw Error(ErrorKind::DegenerateModulus,
                    "a back step of 3 collapses modulo " + std::to_string(2 * n + 1));
    }
    const int k = 2 * n + 1;
    GaussWordFB word;
    word.n = n;
    word.labels.reserve(2 * k);
    int at = 0;
    word.labels.push_back(at);
    for (int t = 1; t < 2 * k; ++t) {
        at = t % 2 == 1 ? (at + 1) % k : (at - 3 + k) % k;
        word.labels.push_back(at);
    }
    return word;
}

ChordDiagram diagram_of(const GaussWordFB& word) {
    std::map<int, std::vector<int>> positions;
    for (size_t i = 0; i < word.labels.size(); ++i) {
        positions[word.labels[i]].push_back(static_cast<int>(i));
    }
    std::vector<int> pairing(word.labels.size());
    for (const auto& [label, occ] : positions) {
        if (occ.size() != 2) {
            throw Error(ErrorKind::BadMultiplicity,
                        "label " + std::to_string(label) + " occurs " +
                            std::to_string(occ.size()) + " times, expected 2",
                        label);
        }
        pairing[occ[0]] = occ[1];
        pairing[occ[1]] = occ[0];
    }
    return ChordDiagram::from_pairing(pairing);
}

Prop12Report verify_prop12(const ChordDiagram& diagram, int n, int subset_guard, int genus_guard,
                           int threads) {
    if (n < 1) {
        throw Error(ErrorKind::TooSmall, "the family starts at n = 1, got " + std::to_string(n));
    }
    Prop12Report report;
    report.n = n;
    report.arc_is_three = arc_number(diagram) == 3;
    report.contains_target = contains_obstruction(diagram, n, subset_guard);
    report.no_smaller = true;
    for (int k = 1; k < n && report.no_smaller; ++k) {
        report.no_smaller = !contains_obstruction(diagram, k, subset_guard);
    }
    report.planar = is_planar_realizable(diagram, genus_guard, threads);
    return report;
}

std::vector<std::string> Prop12Report::to_lines() const {
    nlohmann::ordered_json line;
    line["n"] = n;
    line["arc_is_three"] = arc_is_three;
    line["contains_target"] = contains_target;
    line["no_smaller"] = no_smaller;
    line["planar"] = planar;
    line["pass"] = pass();
    return {line.dump()};
}

}  // namespace arcdiag
