#pragma once

#include <optional>
#include <vector>

#include <arcdiag/census.hpp>
#include <arcdiag/chord_diagram.hpp>
#include <arcdiag/errors.hpp>

namespace testutil {

// Runs fn and reports the ErrorKind it throws, if any.
template <typename Fn>
std::optional<arcdiag::ErrorKind> thrown_kind(Fn&& fn) {
    try {
        fn();
    } catch (const arcdiag::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline arcdiag::ChordDiagram from_pairs(std::initializer_list<arcdiag::Chord> chords,
                                        int point_count) {
    std::vector<arcdiag::Chord> v;
    for (auto c : chords) v.push_back(arcdiag::make_chord(c.a, c.b));
    return arcdiag::ChordDiagram::from_chords(v, point_count);
}

// {(0,1)}
inline arcdiag::ChordDiagram single() { return from_pairs({{0, 1}}, 2); }

// {(0,2),(1,3)}, the interlaced pair
inline arcdiag::ChordDiagram abab() { return from_pairs({{0, 2}, {1, 3}}, 4); }

// {(0,3),(1,4),(2,5)}, pairwise crossing triple
inline arcdiag::ChordDiagram triple() { return from_pairs({{0, 3}, {1, 4}, {2, 5}}, 6); }

// Rotation search; oracle for equivalent().
inline bool equivalent_brute(const arcdiag::ChordDiagram& lhs, const arcdiag::ChordDiagram& rhs) {
    if (lhs.point_count() != rhs.point_count()) return false;
    for (int k = 0; k < std::max(1, lhs.point_count()); ++k) {
        if (arcdiag::rotate(lhs, k) == rhs) return true;
    }
    return false;
}

}  // namespace testutil
