#pragma once

#include <string>
#include <string_view>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

enum class DiagramFormat {
    Auto,
    Pairing,  // whitespace-separated partner indices: "3 2 1 0"
    Pairs,    // dash-joined endpoint pairs: "0-3 1-2"
    Gauss,    // double occurrence word of labels: "a b a b"
};

/// Auto-detection: empty input is a pairing (the empty diagram); all-integer
/// tokens are a pairing; any token containing '-' means pairs; anything else
/// is a Gauss word.
DiagramFormat detect_format(std::string_view text);

ChordDiagram parse_diagram(std::string_view text, DiagramFormat format = DiagramFormat::Auto);

std::string to_pairing_string(const ChordDiagram& diagram);
std::string to_pairs_string(const ChordDiagram& diagram);

}  // namespace arcdiag
