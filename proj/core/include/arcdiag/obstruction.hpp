#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

/// Builds the odd obstruction diagram C_{2n+1}: 2n+1 chords on 4n+2 points,
/// chord i joining 2i to (2i + 2n - 1) mod (4n + 2). Every chord has length
/// m - 2 where m = 2n + 1, and the arc number is exactly 3. Requires n >= 1.
ChordDiagram make_c(int n);

/// If the diagram has the canonical code of some C_{2n+1}, returns that n.
std::optional<int> is_c_odd(const ChordDiagram& diagram);

/// Length condition: every chord has length exactly m - 2. Requires m >= 3
/// (shorter diagrams cannot have a chord of that length).
bool satisfies_star(const ChordDiagram& diagram);

/// Minimality condition: arc number >= 3 while deleting any single chord
/// drops it to at most 2. Deleting chords never raises the arc number, so
/// this is the same as every proper nonempty sub-diagram having arc 2.
bool is_minimal_obstruction(const ChordDiagram& diagram);

enum class StarClass {
    ArcTwo,          // chord count divisible by 4, arc number 2
    EquivalentToCm,  // odd chord count, equivalent to C_m
};

struct StarClassification {
    StarClass kind = StarClass::ArcTwo;
    int n = 0;  // for EquivalentToCm, the n with m = 2n + 1
};

/// Classifies a diagram satisfying the length condition by m mod 4. Throws
/// StarViolated when some chord has a different length; ImpossibleParity for
/// m = 2 mod 4, where no such diagram exists.
StarClassification classify_star(const ChordDiagram& diagram);

/// Circulant graph on `vertices` vertices where i joins i +- step.
struct CirculantGraph {
    int vertices = 0;
    int step = 0;
    std::vector<std::pair<int, int>> edges;
};

/// The graph whose perfect matchings are exactly the diagrams with all chord
/// lengths m - 2: circulant on 2m vertices with step m - 2. Requires m >= 3.
CirculantGraph circulant(int m);

/// Partition of the circulant's vertices into its cycles, each traversed in
/// the +step direction from its least vertex.
std::vector<std::vector<int>> cycle_components(const CirculantGraph& graph);

/// All diagrams on 2m points in which every chord has length m - 2, i.e. all
/// perfect matchings of circulant(m), in deterministic order. Counts follow
/// m mod 4: four for m = 0, none for m = 2, two for odd m.
std::vector<ChordDiagram> enumerate_star_diagrams(int m);

/// A minimal obstruction inside a diagram of arc number >= 3: chords of the
/// original diagram inducing a sub-diagram equivalent to C_{2n+1}.
struct ObstructionWitness {
    std::vector<Chord> chords;
    int n = 0;
};

/// For a diagram of arc number >= 3, deletes chords greedily (lowest index
/// first, restarting after each deletion) while the arc number stays >= 3;
/// the stuck position satisfies the minimality condition and must be
/// equivalent to some C_{2n+1}. Returns nullopt when arc number <= 2; throws
/// logic_error if the stuck position is outside the family.
std::optional<ObstructionWitness> find_obstruction(const ChordDiagram& diagram);

/// Whether some (2n+1)-subset of chords induces a sub-diagram equivalent to
/// C_{2n+1}. `prune` restricts candidates to chords of length >= 2n - 1;
/// lengths only shrink when passing to a sub-diagram, so shorter chords can
/// never take part. Throws GuardExceeded when chord_count exceeds `guard`.
bool contains_obstruction(const ChordDiagram& diagram, int n, int guard = 14, bool prune = true);

}  // namespace arcdiag
