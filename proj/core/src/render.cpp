#include "arcdiag/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace arcdiag {

namespace {

std::string fixed2(double value) {
    if (std::abs(value) < 0.005) {
        value = 0.0;
    }
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

}  // namespace

std::string render_svg(const ChordDiagram& diagram, std::span<const Chord> highlight,
                       const RenderOptions& options) {
    const int n = diagram.point_count();
    const double radius = options.radius;
    const double margin = options.labels ? 36.0 : 16.0;
    const double size = 2.0 * (radius + margin);
    const double center = radius + margin;

    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n;
        xs[i] = center + radius * std::cos(theta);
        ys[i] = center - radius * std::sin(theta);
    }
    std::vector<Chord> marked(highlight.begin(), highlight.end());
    for (Chord& c : marked) {
        c = make_chord(c.a, c.b);
    }
    const auto is_marked = [&](const Chord& c) {
        return std::find(marked.begin(), marked.end(), c) != marked.end();
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(size) + "\" height=\"" +
           fixed2(size) + "\" viewBox=\"0 0 " + fixed2(size) + " " + fixed2(size) + "\">\n";
    svg += "  <circle cx=\"" + fixed2(center) + "\" cy=\"" + fixed2(center) + "\" r=\"" +
           fixed2(radius) + "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (const Chord& c : diagram.chords()) {
        const bool mark = is_marked(c);
        svg += "  <line x1=\"" + fixed2(xs[c.a]) + "\" y1=\"" + fixed2(ys[c.a]) + "\" x2=\"" +
               fixed2(xs[c.b]) + "\" y2=\"" + fixed2(ys[c.b]) + "\" stroke=\"" +
               (mark ? "#d62728" : "#1f77b4") + "\" stroke-width=\"" + (mark ? "2.5" : "1.5") +
               "\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        svg += "  <circle cx=\"" + fixed2(xs[i]) + "\" cy=\"" + fixed2(ys[i]) +
               "\" r=\"3\" fill=\"#333333\"/>\n";
        if (options.labels) {
            const double theta = 2.0 * std::numbers::pi * i / n;
            const double lx = center + (radius + 18.0) * std::cos(theta);
            const double ly = center - (radius + 18.0) * std::sin(theta);
            svg += "  <text x=\"" + fixed2(lx) + "\" y=\"" + fixed2(ly) +
                   "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\" "
                   "dominant-baseline=\"middle\">" +
                   std::to_string(i) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace arcdiag
