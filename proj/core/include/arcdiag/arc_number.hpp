#pragma once

#include <optional>
#include <vector>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

/// A set of cut gaps. Cut g separates point g from point (g+1) mod 2m; the
/// blocks of consecutive points between cuts are the arcs.
struct ArcPartition {
    std::vector<int> cuts;
};

/// Antipodal gap pair (g1, g2 = g1 + m). Cutting at both leaves each side
/// chord-free.
struct CuttingPair {
    int g1 = 0;
    int g2 = 0;
};

/// Whether every chord of the diagram has its endpoints in distinct blocks of
/// the partition. The empty diagram is valid under any nonempty cut set.
bool is_valid_partition(const ChordDiagram& diagram, const ArcPartition& partition);

/// Minimum number of arcs: fewest cuts whose blocks are all chord-free.
/// The empty diagram has arc number 1; any diagram with a chord has at
/// least 2.
int arc_number(const ChordDiagram& diagram);

/// Exhaustive search over cut subsets of ascending size; oracle for
/// arc_number. Throws GuardExceeded when chord_count exceeds `guard`.
int arc_number_bruteforce(const ChordDiagram& diagram, int guard = 8);

/// An optimal partition, deterministic: among optima, the one whose greedy
/// scan starts at the least gap.
ArcPartition min_partition(const ChordDiagram& diagram);

/// The least cutting pair if one exists; exists iff arc_number == 2.
std::optional<CuttingPair> find_cutting_pair(const ChordDiagram& diagram);

/// Scan result used to validate that only the m antipodal gap pairs ever need
/// to be examined.
struct CuttingPairScan {
    std::optional<CuttingPair> pair;
    int pairs_examined = 0;
};

CuttingPairScan scan_cutting_pairs(const ChordDiagram& diagram);

}  // namespace arcdiag
