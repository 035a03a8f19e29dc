#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <arcdiag/census.hpp>
#include <arcdiag/obstruction.hpp>
#include <arcdiag/realize.hpp>

#include "helpers.hpp"

using namespace arcdiag;
using testutil::thrown_kind;

namespace {

int mask_of(const RotationSystem& rotations) {
    int mask = 0;
    for (size_t i = 0; i < rotations.choices.size(); ++i) {
        if (rotations.choices[i]) mask |= 1 << i;
    }
    return mask;
}

RotationSystem system_of(int mask, int m) {
    RotationSystem r;
    r.choices.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) r.choices[static_cast<size_t>(i)] = (mask >> i) & 1;
    return r;
}

// One calibration line per class: code, parity filter verdict, minimum genus.
std::vector<std::string> calibration_table(int m_max) {
    std::vector<std::string> lines;
    for (int m = 1; m <= m_max; ++m) {
        for (const CensusEntry& e : classes(m)) {
            const ChordDiagram d = diagram_of_code(e.code);
            std::ostringstream line;
            line << "m=" << m << " code=";
            for (size_t i = 0; i < e.code.code.size(); ++i) {
                line << (i ? "," : "") << e.code.code[i];
            }
            line << " parity=" << (parity_filter(d) ? 1 : 0)
                 << " genus=" << genus_min(d).genus;
            lines.push_back(line.str());
        }
    }
    return lines;
}

}  // namespace

TEST_CASE("quotient graph of the reference diagrams") {
    const QuotientGraph loops = quotient_graph(testutil::single());
    CHECK(loops.vertex_count == 1);
    REQUIRE(loops.edges.size() == 2);
    CHECK(loops.edges[0] == std::pair<int, int>{0, 0});
    CHECK(loops.edges[1] == std::pair<int, int>{0, 0});

    // three loops plus a triangle
    const QuotientGraph c3 = quotient_graph(make_c(1));
    CHECK(c3.vertex_count == 3);
    const std::vector<std::pair<int, int>> expected{
        {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {0, 2}};
    REQUIRE(c3.edges.size() == 6);
    for (size_t g = 0; g < 6; ++g) {
        const auto [a, b] = c3.edges[g];
        CHECK(std::minmax(a, b) == std::minmax(expected[g].first, expected[g].second));
    }

    // C_5 quotients to the complete graph on five vertices
    const QuotientGraph c5 = quotient_graph(make_c(2));
    CHECK(c5.vertex_count == 5);
    CHECK(c5.edges.size() == 10);
    std::set<std::pair<int, int>> distinct;
    for (auto [a, b] : c5.edges) {
        CHECK(a != b);
        distinct.insert(std::minmax(a, b));
    }
    CHECK(distinct.size() == 10);

    CHECK(thrown_kind([] { quotient_graph(ChordDiagram{}); }) == ErrorKind::EmptyDiagram);
}

TEST_CASE("graph_is_g2n1 recognizes the family quotients") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(graph_is_g2n1(quotient_graph(make_c(n)), n));
        // wrong index never matches
        if (n > 2) CHECK_FALSE(graph_is_g2n1(quotient_graph(make_c(n)), n - 1));
    }
    CHECK_FALSE(graph_is_g2n1(quotient_graph(testutil::triple()), 2));
    CHECK(thrown_kind([] { graph_is_g2n1(quotient_graph(make_c(2)), 1); }) ==
          ErrorKind::TooSmall);
}

TEST_CASE("parity filter flags odd interlacement") {
    CHECK_FALSE(parity_filter(testutil::abab()));
    CHECK(parity_filter(make_c(1)));
    CHECK(parity_filter(make_c(2)));
    CHECK(parity_filter(testutil::triple()));
    CHECK(parity_filter(ChordDiagram{}));
}

TEST_CASE("face traces cover every dart exactly once") {
    for (int m = 1; m <= 3; ++m) {
        for (const ChordDiagram& d : all_matchings(m)) {
            for (int mask = 0; mask < (1 << m); ++mask) {
                const RotationSystem r = system_of(mask, m);
                const auto faces = trace_faces(d, r);
                std::set<int> darts;
                for (const auto& face : faces) {
                    for (int dart : face) darts.insert(dart);
                }
                CHECK(darts.size() == static_cast<size_t>(4 * m));
                CHECK(static_cast<int>(faces.size()) == face_count(d, r));
                CHECK((2 + m - face_count(d, r)) % 2 == 0);
                CHECK(genus_of(d, r) >= 0);
            }
        }
    }
}

TEST_CASE("minimum genus of the reference diagrams") {
    CHECK(genus_min(make_c(1)).genus == 0);
    CHECK(genus_min(testutil::single()).genus == 0);
    CHECK(genus_min(testutil::triple()).genus == 0);
    CHECK(genus_min(testutil::abab()).genus == 1);
    CHECK(genus_min(make_c(2)).genus == 1);
    CHECK(genus_min(make_c(3)).genus == 1);
}

TEST_CASE("genus witness achieves the minimum at the least mask") {
    for (int m = 1; m <= 4; ++m) {
        for (const CensusEntry& e : classes(m)) {
            const ChordDiagram d = diagram_of_code(e.code);
            const GenusSearch found = genus_min(d);
            CHECK(genus_of(d, found.witness) == found.genus);

            int best = 1 << 30;
            int best_mask = 0;
            for (int mask = 0; mask < (1 << m); ++mask) {
                const int g = genus_of(d, system_of(mask, m));
                if (g < best) {
                    best = g;
                    best_mask = mask;
                }
            }
            CHECK(found.genus == best);
            CHECK(mask_of(found.witness) == best_mask);
        }
    }
}

TEST_CASE("genus search is deterministic across thread counts") {
    for (int threads : {1, 2, 4}) {
        const GenusSearch s = genus_min(make_c(3), 20, threads);
        CHECK(s.genus == 1);
        CHECK(mask_of(s.witness) == mask_of(genus_min(make_c(3), 20, 1).witness));
    }
}

TEST_CASE("genus guard and empty diagram") {
    CHECK(thrown_kind([] { genus_min(make_c(11), 20); }) == ErrorKind::GuardExceeded);
    CHECK(thrown_kind([] { genus_min(ChordDiagram{}); }) == ErrorKind::EmptyDiagram);
}

TEST_CASE("planar realizability of the reference diagrams") {
    CHECK(is_planar_realizable(ChordDiagram{}));
    CHECK(is_planar_realizable(make_c(1)));
    CHECK(is_planar_realizable(testutil::triple()));
    CHECK_FALSE(is_planar_realizable(testutil::abab()));
    for (int n = 2; n <= 4; ++n) CHECK_FALSE(is_planar_realizable(make_c(n)));
}

TEST_CASE("minimum genus is a rotation invariant") {
    for (const CensusEntry& e : classes(4)) {
        const ChordDiagram d = diagram_of_code(e.code);
        const int g = genus_min(d).genus;
        for (int k = 1; k < d.point_count(); ++k) {
            CHECK(genus_min(rotate(d, k)).genus == g);
        }
    }
}

TEST_CASE("calibration table matches the committed golden file") {
    const std::vector<std::string> fresh = calibration_table(5);

    std::ifstream in(ARCDIAG_TEST_DATA_DIR "/parity_genus_m5.txt");
    REQUIRE(in.good());
    std::vector<std::string> golden;
    for (std::string line; std::getline(in, line);) golden.push_back(line);

    REQUIRE(fresh.size() == golden.size());
    for (size_t i = 0; i < fresh.size(); ++i) CHECK(fresh[i] == golden[i]);

    // the filter is sound: odd interlacement forces positive genus
    for (const std::string& line : fresh) {
        const bool parity = line.find("parity=1") != std::string::npos;
        const bool planar = line.find("genus=0") != std::string::npos;
        if (planar) CHECK(parity);
    }
}
