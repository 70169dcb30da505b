#include <doctest.h>

#include "oracles.hpp"
#include "vnerve/vnerve.hpp"

using namespace vnerve;

namespace {

CellComplex fig1ii() { return parse_complex(std::string(TEST_DATA_DIR) + "/fig1ii.cx"); }

} // namespace

TEST_CASE("fig1(ii) vortex has five cycles") {
    const CellComplex E = fig1ii();
    const Vortex v = build_vortex(member_cycles(E), E);
    const BettiReport r = betti_numbers(v);
    REQUIRE(r.b_vtex.has_value());
    CHECK(*r.b_vtex == 5);
    CHECK(r.b1 == 5);
}

TEST_CASE("fig1(ii) vortex-nerve shape counts 2 + 5 + 1 = 8") {
    const CellComplex E = fig1ii();
    const Shape shape = extract_shape(E);
    const VortexNerve nerve = vortex_nerve_of(E);
    const BettiReport r = betti_numbers(shape, nerve);
    CHECK(r.b0 == 2);
    CHECK(r.b1 == 5);
    CHECK(r.b2 == 1);
    REQUIRE(r.b_sh.has_value());
    CHECK(*r.b_sh == 8);
}

TEST_CASE("single filled cycle: b1 = 1, b2 = 0, b_vnrv = 1") {
    const CellComplex E = oracles::regular_polygon(6);
    const VortexNerve nerve = vortex_nerve_of(E);
    const BettiReport r = betti_numbers(nerve);
    CHECK(r.b1 == 1);
    CHECK(r.b2 == 0);
    REQUIRE(r.b_vnrv.has_value());
    CHECK(*r.b_vnrv == 1);
}

TEST_CASE("non-vortex-nerve shape: b_sh = 1 + b2") {
    // A square ring with no declared cycles at all: the shape comes from the
    // face structure alone.
    const CellComplex E = CellComplex::build(
        {{0, 0, 0}, {1, 2, 0}, {2, 2, 2}, {3, 0, 2}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {});
    const Shape s = extract_shape(E);
    const BettiReport r = betti_numbers(s);
    CHECK(r.b1 == 1);
    REQUIRE(r.b_sh.has_value());
    CHECK(*r.b_sh == 1 + r.b2);
}

TEST_CASE("closed-form values from the three stated cases") {
    CHECK(vnrv_closed_form(3, 0, 0) == 3);
    CHECK(vnrv_closed_form(3, 2, 0) == 5);
    CHECK(vnrv_closed_form(1, 0, 0) == 1);
    CHECK_THROWS_AS(vnrv_closed_form(0, 0, 0), DomainError);
    CHECK_THROWS_AS(vnrv_closed_form(2, -1, 0), DomainError);
}

TEST_CASE("closed form equals the constructed nerve count") {
    int instances = 0;
    for (int k = 1; k <= 6; ++k)
        for (int n = 0; n <= 3; ++n)
            for (int e = 0; e <= 6; ++e) {
                if (e > 0 && k < 2) continue;
                const CellComplex E = make_nerve_instance(k, n, e);
                const BettiReport r = betti_numbers(vortex_nerve_of(E));
                REQUIRE(r.b_vnrv.has_value());
                CHECK(*r.b_vnrv == vnrv_closed_form(k, n, e));
                ++instances;
            }
    CHECK(instances >= 100);
}

TEST_CASE("lemma identities hold on every constructed report") {
    for (int i = 0; i < 8; ++i) {
        const CellComplex E = make_nerve_instance(1 + i % 4, i % 3, (i % 4 >= 1) ? i % 5 : 0);
        const VortexNerve nerve = vortex_nerve_of(E);
        const BettiReport nr = betti_numbers(nerve);
        CHECK(*nr.b_vnrv == nr.b0 + nr.b1 + nr.b2);
        const Vortex v = build_vortex(member_cycles(E), E);
        const BettiReport vr = betti_numbers(v);
        CHECK(*vr.b_vtex == vr.b1);
    }
}

TEST_CASE("mod-2 homology of the standard small complexes") {
    // Hollow triangle: a circle.
    CHECK(homology_betti({{0, 1}, {1, 2}, {0, 2}}) == std::pair{1, 1});
    // Filled triangle: a disk.
    CHECK(homology_betti({{0, 1, 2}}) == std::pair{1, 0});
    // Two disjoint edges.
    CHECK(homology_betti({{0, 1}, {2, 3}}) == std::pair{2, 0});
    // Two hollow triangles sharing a vertex: wedge of two circles.
    CHECK(homology_betti({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) ==
          std::pair{1, 2});
    CHECK_THROWS_AS(homology_betti({{0, 1, 2, 3}}), DomainError);
}

TEST_CASE("nerve homology of three disks with a common point is a disk") {
    // All three disks contain the origin: the nerve is the full triangle.
    const std::vector<Disk> disks = {{{0.0, 0.0}, 1.0}, {{0.5, 0.0}, 1.0}, {{0.0, 0.5}, 1.0}};
    const Nerve nerve = eh_nerve(disks);
    CHECK(nerve.simplices.size() == 7);
    CHECK(homology_betti(nerve.two_skeleton()) == std::pair{1, 0});
}

TEST_CASE("union raster: single disk") {
    const UnionBetti r = union_betti({{{0.0, 0.0}, 1.0}}, 256);
    CHECK(r.h0 == 1);
    CHECK(r.h1 == 0);
}

TEST_CASE("union raster: chain of three disks matches the path nerve") {
    const std::vector<Disk> chain = {{{0.0, 0.0}, 0.6}, {{1.0, 0.0}, 0.6}, {{2.0, 0.0}, 0.6}};
    const UnionBetti u = union_betti(chain, 512);
    CHECK(u.h0 == 1);
    CHECK(u.h1 == 0);
    const Nerve nerve = eh_nerve(chain);
    CHECK(homology_betti(nerve.two_skeleton()) == std::pair{u.h0, u.h1});
}

TEST_CASE("union raster: pairwise-intersecting disks without a common point") {
    // The classic nerve example: the union has a curvilinear-triangle hole
    // and the nerve is a hollow triangle.
    const double r = 0.58;
    const std::vector<Disk> ring = {
        {{0.0, 0.0}, r}, {{1.0, 0.0}, r}, {{0.5, 0.866}, r}};
    REQUIRE_FALSE(disks_common_point(ring).has_value());
    const UnionBetti u = union_betti(ring, 512);
    CHECK(u.h0 == 1);
    CHECK(u.h1 == 1);
    const Nerve nerve = eh_nerve(ring);
    CHECK(homology_betti(nerve.two_skeleton()) == std::pair{1, 1});
}

TEST_CASE("descriptive nerve with a constant probe equals the spatial nerve") {
    // Families anchored at a common point: the spatial nerve is the full
    // simplex, which is what a constant probe always produces, so the
    // union comparison carries over.
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Disk> anchored;
        const double angles[4] = {0.1, 1.7, 3.2, 4.9};
        for (int i = 0; i < 4; ++i)
            anchored.push_back(
                {{0.3 * std::cos(angles[i] + trial), 0.3 * std::sin(angles[i] + trial)},
                 0.55 + 0.05 * i});
        REQUIRE(disks_common_point(anchored).has_value());
        const Nerve spatial = eh_nerve(anchored);
        auto constant_probe_test = [](const std::vector<int>&) { return true; };
        const Nerve descriptive = eh_nerve_generic(anchored.size(), constant_probe_test);
        CHECK(spatial.simplices == descriptive.simplices);
        const auto nerve_h = homology_betti(spatial.two_skeleton());
        UnionBetti u = union_betti(anchored, 512);
        if (u.too_coarse) u = union_betti(anchored, 1024);
        CHECK(nerve_h == std::pair{u.h0, u.h1});
    }
}

TEST_CASE("seeded disk families: nerve homology equals union homology") {
    for (int i = 0; i < 12; ++i) {
        const auto family = generate_disk_family(3000 + i, 1 + i % 5);
        const Nerve nerve = eh_nerve(family);
        const auto nerve_h = homology_betti(nerve.two_skeleton());
        UnionBetti u = union_betti(family, 512);
        if (u.too_coarse) u = union_betti(family, 1024);
        CHECK(nerve_h == std::pair{u.h0, u.h1});
    }
}
