#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

/// One equivalence class of diagrams on m chords.
struct CensusEntry {
    int m = 0;
    CanonicalCode code;
    std::uint64_t orbit = 0;  // matchings in the class
    int arc = 0;
    bool obstruction = false;  // contains some C_{2n+1} sub-diagram
    bool star = false;         // every chord has length m - 2

    std::string to_json_line() const;
};

std::uint64_t double_factorial(int m);

/// Visits every perfect matching on 2m points exactly once, in the canonical
/// generation order (repeatedly pair the least unpaired point with each
/// larger point, ascending). Throws GuardExceeded when m exceeds `guard`.
void for_each_matching(int m, const std::function<void(const ChordDiagram&)>& fn, int guard = 8);

std::vector<ChordDiagram> all_matchings(int m, int guard = 8);

/// All equivalence classes on m chords, keyed by canonical code, ascending.
std::vector<CensusEntry> classes(int m, int guard = 8, int threads = 1);

/// Number of matchings on 2m points fixed by rotation k, for k = 0..2m-1.
std::vector<std::uint64_t> rotation_fixed_counts(int m, int guard = 8);

/// Class count by Burnside's lemma: (1 / 2m) * sum_k |fixed by rotation k|.
/// Independent cross-check for classes().
std::uint64_t burnside_count(int m, int guard = 8);

struct TheoremReport {
    struct PerM {
        int m = 0;
        std::uint64_t matchings = 0;
        std::uint64_t class_count = 0;
        std::map<int, std::uint64_t> arc_histogram;  // arc value -> classes
        // minimal obstruction classes found at this m: code plus the family
        // index n with the class equivalent to C_{2n+1}
        std::vector<std::pair<CanonicalCode, int>> star_classes;
    };

    int m_max = 0;
    std::vector<PerM> per_m;
    std::vector<std::string> counterexamples;

    bool ok() const { return counterexamples.empty(); }
    std::vector<std::string> to_lines() const;
};

/// Sweeps every class with 1 <= m <= m_max and checks, per class: the greedy
/// arc number against the exhaustive oracle (m <= 5), cutting pair existence
/// iff arc 2, obstruction containment iff arc >= 3, and that every class
/// satisfying the minimality predicate is equivalent to some C_{2n+1}.
TheoremReport verify_theorem(int m_max, int guard = 7, int threads = 1);

struct LemmaReport {
    struct Violation {
        int m = 0;
        CanonicalCode code;
        std::string what;
    };

    int m_max = 0;
    std::uint64_t star_classes_checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::vector<std::string> to_lines() const;
};

/// For every class satisfying the minimality condition with m <= m_max,
/// checks the structural facts that force the C_{2n+1} shape: every chord
/// has length exactly m - 2 (both bounds), and no cutting pair of a
/// one-chord deletion separates the deleted chord's endpoints, whichever
/// original gaps realize the cuts.
LemmaReport verify_lemmas(int m_max, int guard = 8);

}  // namespace arcdiag
