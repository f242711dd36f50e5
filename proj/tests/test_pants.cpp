#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/pants.hpp"

using namespace hds;

TEST_CASE("census of the induced decompositions") {
    for (int g = 0; g <= 3; ++g)
        for (int b = 0; b <= 4; ++b) {
            Surface S = build_surface(g, 2 * b);
            if (!S.constructible || (g == 0 && b < 3) || (b == 0 && g < 2) || (g == 3 && b == 0)) continue;
            CAPTURE(g);
            CAPTURE(b);
            PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
            CHECK((int)P.size() == expected_curve_count(S.ms));
            CHECK((int)P.size() == 3 * g - 3 + 2 * b);
            Census c = piece_census(S, P.curves);
            CHECK(c.valid);
            CHECK(c.disks == b - (S.hyperelliptic() ? 0 : 0));
        }
}

TEST_CASE("standard decomposition of the six-pointed sphere") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    CHECK(P.names == std::vector<std::string>{"pair(1,2)", "pair(3,4)", "pair(5,6)"});
    int disks = 0, pants = 0;
    for (const auto& p : P.pieces) {
        disks += p.kind == PieceKind::TwoMarkedDisk;
        pants += p.kind == PieceKind::Pants;
    }
    CHECK(disks == 3);
    CHECK(pants == 1);
}

TEST_CASE("warped decomposition joins the ends of each block") {
    Surface S = build_surface(0, 6);
    PantsDecomposition W = induced_decomposition(S, Flavor::Warped, {6});
    CHECK(W.size() == 3);
    CHECK(std::find(W.names.begin(), W.names.end(), "pair(6,1)") != W.names.end());
    CHECK(std::find(W.names.begin(), W.names.end(), "pair(2,3)") != W.names.end());
    for (const auto& c : W.curves) CHECK(point_sides(S, c).size() == 7);
}

TEST_CASE("block validation") {
    Surface S = build_surface(1, 8);
    CHECK_NOTHROW(validate_blocks(S, {4, 4}));
    CHECK_THROWS_AS(validate_blocks(S, {}), std::invalid_argument);
    CHECK_THROWS_AS(validate_blocks(S, {3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(validate_blocks(S, {4, 2}), std::invalid_argument);
    CHECK(default_blocks(4, 3) == std::vector<int>{4, 2, 2});
    CHECK(default_blocks(3, 1) == std::vector<int>{6});
    CHECK_THROWS_AS(default_blocks(2, 3), std::invalid_argument);
}

TEST_CASE("seam profiles from crossing counts") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    SeamProfile even = profile_from_crossings(P, {2, 2, 2});
    CHECK_FALSE(has_wave(even));
    CHECK(min_seam(even) == 1);
    CHECK(is_k_seamed(even, 1));
    CHECK_FALSE(is_k_seamed(even, 2));
    SeamProfile wavy = profile_from_crossings(P, {6, 2, 2});
    CHECK(has_wave(wavy));
}

TEST_CASE("seed curve is one-seamed and crosses every class") {
    for (auto [g, m] : {std::pair{0, 6}, {1, 2}, {2, 0}, {2, 2}, {1, 4}}) {
        CAPTURE(g);
        CAPTURE(m);
        Surface S = build_surface(g, m);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        MultiCurve s = seed_curve(S);
        CHECK(count_components(S, s) == 1);
        for (const Int& x : class_crossings(S, P, s)) CHECK(x > 0);
        SeamProfile prof = classify_arcs(S, P, s);
        CHECK_FALSE(has_wave(prof));
        CHECK(min_seam(prof) >= 1);
        if (S.disk_boundary) CHECK(disk_arc_count(S, s) >= 1);
    }
}

TEST_CASE("genus three seed is not available") {
    Surface S = build_surface(3, 0);
    CHECK_THROWS(seed_curve(S));
}

TEST_CASE("circling number of a twisted curve") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    MultiCurve y = path_boundary(S, 2, 2);
    MultiCurve g = twist_encoding(S, y, 2)(P.curves[0]);
    CHECK(circling_number(S, g, y, P.curves) == 2);
}
