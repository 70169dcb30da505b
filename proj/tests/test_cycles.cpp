#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "vnerve/vnerve.hpp"

using namespace vnerve;

namespace {

CellComplex fig1i() { return parse_complex(std::string(TEST_DATA_DIR) + "/fig1i.cx"); }
CellComplex fig1ii() { return parse_complex(std::string(TEST_DATA_DIR) + "/fig1ii.cx"); }

// Axis-aligned square cycle of given half-side around a center.
CellComplex concentric_squares(const std::vector<double>& half_sides) {
    std::vector<Vertex> vs;
    std::vector<std::array<int, 2>> es;
    std::vector<FilledCycle> cycles;
    int id = 0;
    for (double h : half_sides) {
        FilledCycle c;
        const int first = id;
        const double pts[4][2] = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
        for (auto& p : pts) {
            vs.push_back({id, p[0], p[1]});
            c.boundary.push_back(id);
            ++id;
        }
        for (int j = 0; j < 4; ++j) es.push_back({first + j, first + (j + 1) % 4});
        cycles.push_back(c);
    }
    return CellComplex::build(vs, es, {}, cycles);
}

} // namespace

TEST_CASE("hexagon ring yields one cycle of length six") {
    const CellComplex E = oracles::regular_polygon(6);
    const auto cycles = find_cycles(E);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].boundary.size() == 6);
}

TEST_CASE("fig1(i) has exactly the two drawn cycles") {
    const CellComplex E = fig1i();
    const auto cycles = find_cycles(E);
    REQUIRE(cycles.size() == 2);
    FilledCycle cycA;
    cycA.boundary = {0, 1, 2, 3, 4, 5};
    FilledCycle cycB;
    cycB.boundary = {6, 5, 4, 9, 8, 7};
    CHECK((cycles[0].same_boundary(cycA) || cycles[1].same_boundary(cycA)));
    CHECK((cycles[0].same_boundary(cycB) || cycles[1].same_boundary(cycB)));
}

TEST_CASE("face counts follow Euler's formula on random connected complexes") {
    for (int i = 0; i < 25; ++i) {
        const CellComplex E = generate_random_planar(500 + i, 8 + i % 10);
        REQUIRE(connected_components(E) == 1);
        const long v = static_cast<long>(E.vertices().size());
        const long e = static_cast<long>(E.edges().size());
        const long bounded_faces = e - v + 1; // F - 1 with F from V - E + F = 2
        CHECK(static_cast<long>(find_cycles(E).size()) == bounded_faces);
    }
}

TEST_CASE("point_in_cycle agrees with the winding-number oracle") {
    std::mt19937_64 rng(23);
    auto coord = [&]() {
        return -2.0 + 4.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    const CellComplex hex = oracles::regular_polygon(7, 1.3);
    const FilledCycle& cycle = hex.declared_cycles()[0];
    const auto poly = hex.polyline(cycle.boundary);
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        const Point p{coord(), coord()};
        const Containment got = point_in_cycle(p, cycle, hex);
        const Containment expect = oracles::winding_point_in_polygon(p, poly);
        if (got != expect) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("point_in_cycle basics") {
    const CellComplex hex = oracles::regular_polygon(6);
    const FilledCycle& cycle = hex.declared_cycles()[0];
    CHECK(point_in_cycle({0, 0}, cycle, hex) == Containment::Inside);
    CHECK(point_in_cycle(hex.position(0), cycle, hex) == Containment::OnBoundary);
    CHECK(point_in_cycle({5, 5}, cycle, hex) == Containment::Outside);
}

TEST_CASE("fig1(ii): cycA nests in cycC") {
    const CellComplex E = fig1ii();
    const auto& cycles = E.declared_cycles();
    const FilledCycle& cycA = cycles[0];
    const FilledCycle& cycC = cycles[4];
    CHECK(is_nested(cycA, cycC, E));
    CHECK_FALSE(is_nested(cycC, cycA, E));
    CHECK_FALSE(is_nested(cycA, cycA, E)); // strictness
}

TEST_CASE("nesting on concentric and overlapping squares") {
    const CellComplex nested = concentric_squares({0.5, 1.5});
    CHECK(is_nested(nested.declared_cycles()[0], nested.declared_cycles()[1], nested));

    // Corner-touching squares overlap at a point but are not nested.
    const CellComplex both = CellComplex::build(
        {{0, 0, 0}, {1, 2, 0}, {2, 2, 2}, {3, 0, 2}, {4, 4, 2}, {5, 4, 4}, {6, 2, 4}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}, {5, 6}, {6, 2}}, {},
        {FilledCycle{{0, 1, 2, 3}, true, false}, FilledCycle{{2, 4, 5, 6}, true, false}});
    CHECK_FALSE(is_nested(both.declared_cycles()[0], both.declared_cycles()[1], both));
    CHECK_FALSE(is_nested(both.declared_cycles()[1], both.declared_cycles()[0], both));
    CHECK(cycles_intersect(both.declared_cycles()[0], both.declared_cycles()[1], both));
}

TEST_CASE("is_nested is a strict partial order on concentric families") {
    const CellComplex E = concentric_squares({0.4, 0.9, 1.7, 2.6});
    const auto& cs = E.declared_cycles();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK_FALSE(is_nested(cs[i], cs[i], E)); // irreflexive
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j) continue;
            if (is_nested(cs[i], cs[j], E))
                CHECK_FALSE(is_nested(cs[j], cs[i], E)); // antisymmetric
            for (std::size_t k = 0; k < cs.size(); ++k) {
                if (k == i || k == j) continue;
                if (is_nested(cs[i], cs[j], E) && is_nested(cs[j], cs[k], E))
                    CHECK(is_nested(cs[i], cs[k], E)); // transitive
            }
        }
    }
}

TEST_CASE("cycles_intersect: shared edge, nesting, and separation") {
    const CellComplex i = fig1i();
    CHECK(cycles_intersect(i.declared_cycles()[0], i.declared_cycles()[1], i));
    const CellComplex ii = fig1ii();
    CHECK(cycles_intersect(ii.declared_cycles()[0], ii.declared_cycles()[4], ii));
    const CellComplex far = CellComplex::build(
        {{0, 0, 0}, {1, 1, 0}, {2, 0, 1}, {3, 9, 9}, {4, 10, 9}, {5, 9, 10}},
        {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {},
        {FilledCycle{{0, 1, 2}, true, false}, FilledCycle{{3, 4, 5}, true, false}});
    CHECK_FALSE(cycles_intersect(far.declared_cycles()[0], far.declared_cycles()[1], far));
}

TEST_CASE("nesting implies intersection for filled cycles") {
    for (int i = 0; i < 10; ++i) {
        const CellComplex E = generate_nested_cycles(900 + i, 3);
        const auto& cs = E.declared_cycles();
        for (std::size_t a = 0; a < cs.size(); ++a)
            for (std::size_t b = 0; b < cs.size(); ++b)
                if (a != b && is_nested(cs[a], cs[b], E))
                    CHECK(cycles_intersect(cs[a], cs[b], E));
    }
}

TEST_CASE("fig1(ii) member cycles build the five-cycle vortex in order") {
    const CellComplex E = fig1ii();
    const auto members = member_cycles(E);
    REQUIRE(members.size() == 5);
    const Vortex v = build_vortex(members, E);
    REQUIRE(v.cycles.size() == 5);
    // Innermost to outermost: cycA, <e1>, cycB, <e0>, cycC.
    CHECK(v.cycles[0].boundary.size() == 6);
    CHECK(v.cycles[0].boundary[0] == 12);
    CHECK(v.cycles[1].boundary.size() == 2);
    CHECK(v.cycles[2].boundary[0] == 6);
    CHECK(v.cycles[3].boundary.size() == 2);
    CHECK(v.cycles[4].boundary[0] == 0);
}

TEST_CASE("single cycle is a vortex of one") {
    const CellComplex E = oracles::regular_polygon(5);
    const Vortex v = build_vortex(E.declared_cycles(), E);
    CHECK(v.cycles.size() == 1);
}

TEST_CASE("build_vortex sorts shuffled concentric squares correctly") {
    const CellComplex E = concentric_squares({0.3, 0.8, 1.4, 2.2, 3.1});
    std::vector<FilledCycle> shuffled = E.declared_cycles();
    std::mt19937_64 rng(3);
    for (int round = 0; round < 10; ++round) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const Vortex v = build_vortex(shuffled, E);
        // Oracle: every consecutive pair must nest per the pairwise matrix.
        for (std::size_t i = 0; i + 1 < v.cycles.size(); ++i)
            CHECK(is_nested(v.cycles[i], v.cycles[i + 1], E));
    }
}

TEST_CASE("non-nesting cycles are rejected with the offending pair") {
    const CellComplex far = CellComplex::build(
        {{0, 0, 0}, {1, 1, 0}, {2, 0, 1}, {3, 9, 9}, {4, 10, 9}, {5, 9, 10}},
        {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {},
        {FilledCycle{{0, 1, 2}, true, false}, FilledCycle{{3, 4, 5}, true, false}});
    CHECK_THROWS_WITH_AS(build_vortex(far.declared_cycles(), far),
                         doctest::Contains("not nested"), NotAVortexError);
}

TEST_CASE("extract_shape: filled square has no holes") {
    const CellComplex E = oracles::grid_square();
    const Shape s = extract_shape(E);
    CHECK(s.boundary_cycle.boundary.size() == 4);
    CHECK(s.interior_holes.empty());
}

TEST_CASE("fig1(ii) shape: boundary cycC with one hole") {
    const Shape s = extract_shape(fig1ii());
    CHECK(s.boundary_cycle.boundary.size() == 6);
    std::vector<int> sorted = s.boundary_cycle.boundary;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(s.interior_holes.size() == 1);
}

TEST_CASE("annulus-like complex yields one hole") {
    std::vector<Vertex> vs;
    std::vector<std::array<int, 2>> es;
    std::vector<FilledCycle> cycles;
    // Outer square, inner square flagged as a hole.
    const double outer[4][2] = {{-2, -2}, {2, -2}, {2, 2}, {-2, 2}};
    const double inner[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    FilledCycle co, ci;
    for (int j = 0; j < 4; ++j) {
        vs.push_back({j, outer[j][0], outer[j][1]});
        co.boundary.push_back(j);
        es.push_back({j, (j + 1) % 4});
    }
    for (int j = 0; j < 4; ++j) {
        vs.push_back({4 + j, inner[j][0], inner[j][1]});
        ci.boundary.push_back(4 + j);
        es.push_back({4 + j, 4 + (j + 1) % 4});
    }
    ci.hole = true;
    const CellComplex E = CellComplex::build(vs, es, {}, {co, ci});
    const Shape s = extract_shape(E);
    CHECK(s.interior_holes.size() == 1);
}

TEST_CASE("two outer components are not a shape") {
    const CellComplex far = CellComplex::build(
        {{0, 0, 0}, {1, 1, 0}, {2, 0, 1}, {3, 9, 9}, {4, 10, 9}, {5, 9, 10}},
        {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {});
    CHECK_THROWS_AS(extract_shape(far), NotAShapeError);
}

TEST_CASE("member cycles: top-level holes are members, interior holes are not") {
    CHECK(member_cycles(fig1i()).size() == 2);  // the opaque cycA stays a member
    CHECK(member_cycles(fig1ii()).size() == 5); // the quad hole is subsidiary
}

TEST_CASE("degenerate declared cycles are detected and deduplicated") {
    const CellComplex E = fig1ii();
    const auto cycles = find_cycles(E);
    // 4 bounded faces plus declared cycB, cycC, <e0>, <e1> that are not faces.
    CHECK(cycles.size() == 8);
}
