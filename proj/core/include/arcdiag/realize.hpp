#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

/// Quotient of the circle by the chords: one vertex per chord, one edge per
/// gap. Edge g joins the chords owning points g and (g+1) mod 2m; loops and
/// parallel edges arise naturally. Requires a nonempty diagram.
struct QuotientGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // indexed by gap
};

QuotientGraph quotient_graph(const ChordDiagram& diagram);

/// Whether the quotient graph is the 4-regular multigraph of C_{2n+1}: a
/// (2n+1)-cycle with step-3 chords (both i+-1 and i+-3 neighbours, doubled
/// edges where those coincide). Requires n >= 2.
bool graph_is_g2n1(const QuotientGraph& graph, int n);

/// Necessary condition for planar realizability: every chord interlaces an
/// even number of others. Advisory filter only; not sufficient.
bool parity_filter(const ChordDiagram& diagram);

/// One transverse rotation choice per vertex of the quotient graph.
struct RotationSystem {
    std::vector<std::uint8_t> choices;
};

int face_count(const ChordDiagram& diagram, const RotationSystem& rotations);

/// Faces as dart cycles; dart 2g leaves point g along gap g, dart 2g+1
/// enters point (g+1) mod 2m.
std::vector<std::vector<int>> trace_faces(const ChordDiagram& diagram,
                                          const RotationSystem& rotations);

/// Euler genus of the closed surface induced by one rotation system:
/// (2 + m - F) / 2 for m chords and F faces.
int genus_of(const ChordDiagram& diagram, const RotationSystem& rotations);

struct GenusSearch {
    int genus = 0;
    RotationSystem witness;
};

/// Minimum genus over all 2^m transverse rotation systems, with the witness
/// of least choice mask among the minima. Early exit at genus 0. Throws
/// GuardExceeded when chord_count exceeds `guard`; EmptyDiagram when m = 0.
GenusSearch genus_min(const ChordDiagram& diagram, int guard = 20, int threads = 1);

/// Whether the diagram is the Gauss code of a planar closed curve: minimum
/// genus 0. The empty diagram is realizable.
bool is_planar_realizable(const ChordDiagram& diagram, int guard = 20, int threads = 1);

}  // namespace arcdiag
