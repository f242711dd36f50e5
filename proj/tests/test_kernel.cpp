#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/twist.hpp"

using namespace hds;

namespace {
MultiCurve pair_curve(const Surface& S, int k) { return path_boundary(S, k, k); }
}

TEST_CASE("normalize validates coordinates") {
    Surface S = build_surface(0, 6);
    Weights w = pair_curve(S, 1).w;
    CHECK(normalize(S, w).curve.w == w);
    Weights shorter(w.begin(), w.end() - 1);
    CHECK_THROWS_AS(normalize(S, shorter), std::invalid_argument);
    Weights neg = w;
    neg[0] = -1;
    CHECK_THROWS_AS(normalize(S, neg), std::invalid_argument);
    Weights bad = w;
    bad[0] += 1;
    CHECK_THROWS_AS(normalize(S, bad), std::invalid_argument);
}

TEST_CASE("component counts") {
    Surface S = build_surface(0, 6);
    MultiCurve a = pair_curve(S, 1), b = pair_curve(S, 3);
    CHECK(count_components(S, a) == 1);
    CHECK(count_components(S, lam_sum(a, b)) == 2);
    CHECK(count_components(S, lam_sum(a, a)) == 2);
    CHECK(curve_components(lam_sum(a, a)).size() == 1);
}

TEST_CASE("intersection numbers") {
    Surface S = build_surface(0, 6);
    MultiCurve a = pair_curve(S, 1), b = pair_curve(S, 2), c = pair_curve(S, 3);
    CHECK(geometric_intersection(S, a, a) == 0);
    CHECK(geometric_intersection(S, a, c) == 0);
    CHECK(geometric_intersection(S, a, b) == 2);
    CHECK(geometric_intersection(S, b, a) == 2);
    CHECK(geometric_intersection(S, std::vector<MultiCurve>{a, c}, b) == 4);
}

TEST_CASE("lifted intersection numbers in the hyperelliptic model") {
    Surface S = build_surface(2, 0);
    MultiCurve q1 = pair_curve(S, 1), q2 = pair_curve(S, 2);
    CHECK(lift_info(S, q1).two_point_side);
    CHECK(lift_info(S, q1).classes == 1);
    CHECK(geometric_intersection(S, q1, q2) == 1);
    // a curve around four branch points lifts to two classes
    MultiCurve r = path_boundary(S, 1, 3);
    CHECK(lift_info(S, r).classes == 1);
    CHECK(count_components(S, r) >= 1);
}

TEST_CASE("twist law on simple pairs") {
    for (auto [g, m] : {std::pair{0, 6}, {2, 0}}) {
        Surface S = build_surface(g, m);
        MultiCurve x = pair_curve(S, 1), y = pair_curve(S, 2);
        Int i = geometric_intersection(S, x, y);
        for (long n = 1; n <= 3; ++n) CHECK(geometric_intersection(S, twist_encoding(S, y, n)(x), x) == n * i * i);
    }
}

TEST_CASE("point sides and core arcs") {
    Surface S = build_surface(0, 6);
    auto side = point_sides(S, pair_curve(S, 3));
    CHECK(side[3] == side[4]);
    CHECK(side[1] != side[3]);
    auto arc = core_arc(pair_curve(S, 3));
    REQUIRE(arc.has_value());
    CHECK(arc_boundary(*arc).w == pair_curve(S, 3).w);
}

TEST_CASE("traced curves reproduce their coordinates") {
    Surface S = build_surface(1, 4);
    MultiCurve s = seed_curve(S);
    TracedCurve t = trace(s);
    CHECK(coordinates(t) == s.w);
    Int total = 0;
    for (const auto& b : t.bundles) {
        CHECK(b.weight > 0);
        total += b.weight;
    }
    CHECK(total > 0);
}

TEST_CASE("mutual efficient position records crossings") {
    Surface S = build_surface(0, 6);
    auto cfg = mutual_efficient_position(S, {pair_curve(S, 1), pair_curve(S, 2), pair_curve(S, 3)});
    CHECK(cfg.traces.size() == 3);
    CHECK(cfg.crossings[0][1] == 2);
    CHECK(cfg.crossings[0][2] == 0);
    CHECK(cfg.crossings[1][0] == cfg.crossings[0][1]);
}

TEST_CASE("regions of a pants decomposition") {
    Surface S = build_surface(0, 6);
    RegionMap rm = complement_regions({pair_curve(S, 1), pair_curve(S, 3), pair_curve(S, 5)});
    CHECK(rm.regions.size() == 4);
    int disks = 0;
    for (const auto& r : rm.regions) disks += r.points.size() == 2;
    CHECK(disks == 3);
}

TEST_CASE("annulus chart counts circling") {
    Surface S = build_surface(0, 6);
    MultiCurve y = pair_curve(S, 2), p = pair_curve(S, 1);
    MultiCurve g = twist_encoding(S, y, 2)(p);
    AnnulusChart ch = annulus_chart(S, y, {p, pair_curve(S, 3)}, g);
    CHECK(ch.strands == geometric_intersection(S, g, y));
    CHECK(ch.circling == 2);
}
