#pragma once

#include <span>
#include <string>

#include "arcdiag/chord_diagram.hpp"

namespace arcdiag {

struct RenderOptions {
    double radius = 200.0;
    bool labels = true;
};

/// Deterministic SVG: the circle, points at angle 2*pi*i/(2m) counterclockwise
/// from the positive x axis, straight chords, chords in `highlight` stroked
/// distinctly. Coordinates rounded to two decimals; byte-identical output for
/// equal inputs.
std::string render_svg(const ChordDiagram& diagram, std::span<const Chord> highlight = {},
                       const RenderOptions& options = {});

}  // namespace arcdiag
