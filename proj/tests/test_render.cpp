#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <arcdiag/obstruction.hpp>
#include <arcdiag/render.hpp>

#include "helpers.hpp"

using namespace arcdiag;

namespace {

int count_of(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("svg structure scales with the diagram") {
    const ChordDiagram c5 = make_c(2);
    const std::string svg = render_svg(c5);
    CHECK(svg.starts_with("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg "));
    CHECK(svg.ends_with("</svg>\n"));
    CHECK(count_of(svg, "<line ") == 5);
    CHECK(count_of(svg, "r=\"3\"") == 10);    // one dot per point
    CHECK(count_of(svg, "<text ") == 10);     // labels on by default
    CHECK(count_of(svg, "r=\"200.00\"") == 1);

    // point 0 lies on the positive x axis: center 236, radius 200
    CHECK(svg.find("x1=\"436.00\" y1=\"236.00\"") != std::string::npos);
}

TEST_CASE("empty diagram renders just the circle") {
    const std::string svg = render_svg(ChordDiagram{});
    CHECK(count_of(svg, "<line ") == 0);
    CHECK(count_of(svg, "<circle ") == 1);
    CHECK(count_of(svg, "<text ") == 0);
}

TEST_CASE("labels can be disabled, shrinking the margin") {
    RenderOptions options;
    options.labels = false;
    const std::string svg = render_svg(testutil::abab(), {}, options);
    CHECK(count_of(svg, "<text ") == 0);
    // margin drops from 36 to 16, so the center moves to 216
    CHECK(svg.find("cx=\"216.00\" cy=\"216.00\" r=\"200.00\"") != std::string::npos);
}

TEST_CASE("radius option rescales the drawing") {
    RenderOptions options;
    options.radius = 100.0;
    const std::string svg = render_svg(testutil::single(), {}, options);
    CHECK(svg.find("r=\"100.00\"") != std::string::npos);
    CHECK(svg.find("width=\"272.00\"") != std::string::npos);  // 2 * (100 + 36)
}

TEST_CASE("highlighted chords are stroked distinctly") {
    const ChordDiagram padded =
        testutil::from_pairs({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 8);
    const std::vector<Chord> witness{make_chord(2, 3), make_chord(4, 5), make_chord(6, 7)};
    const std::string svg = render_svg(padded, witness);
    CHECK(count_of(svg, "#d62728") == 3);
    CHECK(count_of(svg, "#1f77b4") == 1);
    CHECK(count_of(svg, "stroke-width=\"2.5\"") == 3);

    // endpoint order of a highlight entry does not matter
    const std::vector<Chord> reversed{Chord{3, 2}};
    const std::string one = render_svg(padded, reversed);
    CHECK(count_of(one, "#d62728") == 1);

    const std::string none = render_svg(padded);
    CHECK(count_of(none, "#d62728") == 0);
    CHECK(count_of(none, "#1f77b4") == 4);
}

TEST_CASE("output is byte-identical across calls") {
    for (int n = 1; n <= 4; ++n) {
        const ChordDiagram c = make_c(n);
        CHECK(render_svg(c) == render_svg(c));
    }
    CHECK(render_svg(testutil::abab()) == render_svg(testutil::abab()));
}

TEST_CASE("no coordinate prints as negative zero") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(render_svg(make_c(n)).find("-0.00") == std::string::npos);
    }
}
