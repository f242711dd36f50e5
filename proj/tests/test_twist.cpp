#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/twist.hpp"

using namespace hds;

TEST_CASE("twists require disjoint collections") {
    Surface S = build_surface(0, 6);
    MultiCurve a = path_boundary(S, 1, 1), b = path_boundary(S, 2, 2);
    CHECK_THROWS_AS(dehn_twist(S, {a}, {a, b}, 1), std::invalid_argument);
    CHECK_THROWS_AS(dehn_twist(S, {a, b}, {a}, 1), std::invalid_argument);
    CHECK_NOTHROW(dehn_twist(S, {a, path_boundary(S, 3, 3)}, {b}, 1));
}

TEST_CASE("zero and inverse twists") {
    Surface S = build_surface(1, 2);
    MultiCurve x = seed_curve(S);
    MultiCurve y = S.named.at("a_0");
    CHECK(dehn_twist(S, {x}, {y}, 0)[0].w == x.w);
    auto up = dehn_twist(S, {x}, {y}, 3);
    CHECK(dehn_twist(S, up, {y}, -3)[0].w == x.w);
    TwistWord w{{{y}, 2}, {{y}, -2}};
    CHECK(apply_word(S, {x}, w)[0].w == x.w);
}

TEST_CASE("twist law") {
    Surface S = build_surface(2, 0);
    MultiCurve x = path_boundary(S, 1, 1), y = path_boundary(S, 2, 4);
    Int i = geometric_intersection(S, x, y);
    REQUIRE(i > 0);
    for (long n = 1; n <= 4; ++n) {
        CHECK(geometric_intersection(S, dehn_twist(S, {x}, {y}, n)[0], x) == n * i * i);
        CHECK(geometric_intersection(S, dehn_twist(S, {x}, {y}, -n)[0], x) == n * i * i);
    }
}

TEST_CASE("tower levels are pants decompositions") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    auto tower = iterate_tower(S, P, seed_curve(S), 2);
    REQUIRE(tower.size() == 3);
    for (const auto& Y : tower) {
        CHECK(Y.size() == P.size());
        CHECK(Y.names == P.names);
        CHECK(piece_census(S, Y.curves).valid);
    }
    CHECK(geometric_intersection(S, tower[0].curves, tower[1].curves[0]) > 0);
}

TEST_CASE("tower respects the size cap") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    CHECK_THROWS_AS(iterate_tower(S, P, seed_curve(S), 4, TowerLimits{8}), std::runtime_error);
}

TEST_CASE("seamedness growth") {
    for (auto [g, m] : {std::pair{0, 6}, {2, 0}, {1, 2}}) {
        CAPTURE(g);
        Surface S = build_surface(g, m);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        SeamednessReport r1 = seamedness_growth_report(S, P, seed_curve(S), 1);
        CHECK(r1.ok());
        auto tower = iterate_tower(S, P, seed_curve(S), 0);
        SeamednessReport r2 = seamedness_growth_report(S, P, tower[0].curves[0], 2);
        CHECK(r2.ok());
        CHECK(r2.gamma_vs_image >= 4);
    }
}
