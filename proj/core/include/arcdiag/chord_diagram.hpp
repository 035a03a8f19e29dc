#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arcdiag/errors.hpp"

namespace arcdiag {

/// A chord joining points `a < b` on the circle.
struct Chord {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Normalizes endpoint order so that `a < b`.
constexpr Chord make_chord(int a, int b) {
    return a < b ? Chord{a, b} : Chord{b, a};
}

/// Chord diagram on 2m points, labelled 0..2m-1 counterclockwise around an
/// oriented circle. Stored as a fixed-point-free involution on the points.
class ChordDiagram {
  public:
    ChordDiagram() = default;

    static ChordDiagram from_pairing(std::span<const int> pairing);
    static ChordDiagram from_gauss_word(std::span<const std::string> word);
    static ChordDiagram from_chords(std::span<const Chord> chords, int point_count);

    int chord_count() const noexcept { return static_cast<int>(pairing_.size()) / 2; }
    int point_count() const noexcept { return static_cast<int>(pairing_.size()); }
    bool empty() const noexcept { return pairing_.empty(); }

    int partner(int point) const;
    const std::vector<int>& pairing() const noexcept { return pairing_; }

    /// Chords sorted by smaller endpoint.
    std::vector<Chord> chords() const;
    Chord chord_at(int point) const;
    bool has_chord(Chord chord) const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

  private:
    std::vector<int> pairing_;
};

/// Rotation-invariant identifier: the lexicographically least rotation of the
/// distance word d_i = (pairing[i] - i) mod 2m. Faithful: the diagram with
/// pairing[i] = (i + code[i]) mod 2m is the least representative of the class.
struct CanonicalCode {
    std::vector<int> code;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct InterlacementGraph {
    int chord_count = 0;
    std::vector<std::vector<uint8_t>> adj;

    int degree(int chord_index) const;
};

/// Rotates the diagram by k points counterclockwise: point i of the input
/// becomes point (i + k) mod 2m of the result.
ChordDiagram rotate(const ChordDiagram& diagram, int k);

/// Reflects across the axis through point 0: point i maps to (2m - i) mod 2m.
ChordDiagram reflect(const ChordDiagram& diagram);

CanonicalCode canonical_code(const ChordDiagram& diagram);

/// The class representative encoded by a canonical code: the diagram with
/// pairing[i] = (i + code[i]) mod 2m.
ChordDiagram diagram_of_code(const CanonicalCode& code);

/// Equivalence under rotation; with `dihedral` also under reflection.
/// Diagrams of different sizes are never equivalent.
bool equivalent(const ChordDiagram& lhs, const ChordDiagram& rhs, bool dihedral = false);

/// Whether the two chords interlace (their endpoints alternate on the circle).
bool crosses(Chord lhs, Chord rhs);

/// Length of a chord: the smaller of the two gap counts between its
/// endpoints, in {1, ..., m} for a diagram with m chords.
int chord_length(const ChordDiagram& diagram, Chord chord);

/// Diagram induced by a subset of chords, endpoints relabelled by their rank
/// among the kept points.
ChordDiagram sub_diagram(const ChordDiagram& diagram, std::span<const Chord> keep);

ChordDiagram delete_chord(const ChordDiagram& diagram, Chord chord);

InterlacementGraph interlacement_graph(const ChordDiagram& diagram);

namespace detail {

/// Booth's least-rotation algorithm; returns the start index.
int least_rotation_booth(std::span<const int> word);

/// Quadratic scan over all rotations; cross-check oracle for Booth.
int least_rotation_scan(std::span<const int> word);

}  // namespace detail

}  // namespace arcdiag
