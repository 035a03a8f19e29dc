#pragma once

#include <utility>
#include <vector>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

/// Chords of the diagram that do not interlace.
bool parallel(const ChordDiagram& diagram, Chord lhs, Chord rhs);

/// Cyclic adjacency of two points on the circle of the diagram.
bool next_to(const ChordDiagram& diagram, int p, int q);

/// Chords whose endpoints are pairwise adjacent: {a, b} close to {c, d} when
/// a is next to c and b is next to d, or a is next to d and b is next to c.
bool close_chords(const ChordDiagram& diagram, Chord lhs, Chord rhs);

/// Doubling by twin chords: each chord {a, b} gains a twin {a', b'} with a'
/// immediately counterclockwise of a and b' immediately clockwise of b. The
/// result has 2m chords on 4m points; `twins` maps each original chord (in
/// relabelled coordinates) to its twin.
struct TwinDoubleResult {
    ChordDiagram diagram;
    std::vector<std::pair<Chord, Chord>> twins;
};

TwinDoubleResult twin_double(const ChordDiagram& diagram);

/// The forward-back Gauss word on symbols 0..2n, built by alternating steps
/// +1 and -3 mod 2n+1 from 0, of length 2(2n+1). Each symbol occurs exactly
/// twice. Requires n >= 2; n = 1 degenerates (step -3 = step +1 mod 5 fails
/// to close).
struct GaussWordFB {
    int n = 0;
    std::vector<int> labels;
};

GaussWordFB forward_back_word(int n);

/// The chord diagram of a double occurrence word: positions of equal labels
/// are paired.
ChordDiagram diagram_of(const GaussWordFB& word);

struct Prop12Report {
    int n = 0;
    bool arc_is_three = false;
    bool contains_target = false;  // some (2n+1)-subset equivalent to C_{2n+1}
    bool no_smaller = false;       // no C_{2k+1} sub-diagram for k < n
    bool planar = false;

    bool pass() const { return arc_is_three && contains_target && no_smaller && planar; }
    std::vector<std::string> to_lines() const;
};

/// Checks a candidate witness diagram at index n: arc number exactly 3,
/// contains C_{2n+1}, contains no smaller member of the family, and is
/// planar realizable.
Prop12Report verify_prop12(const ChordDiagram& diagram, int n, int subset_guard = 14,
                           int genus_guard = 20, int threads = 1);

}  // namespace arcdiag
