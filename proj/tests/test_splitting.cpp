#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/splitting.hpp"

#include <random>

using namespace hds;

TEST_CASE("marked point pairings") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    PantsDecomposition W = induced_decomposition(S, Flavor::Warped, {6});
    CHECK(marked_point_pairing(P) == Pairing{{1, 2}, {3, 4}, {5, 6}});
    CHECK(marked_point_pairing(W) == Pairing{{1, 6}, {2, 3}, {4, 5}});
    CHECK(marked_point_pairing(S, P.curves) == marked_point_pairing(P));
    auto tower = iterate_tower(S, P, seed_curve(S), 1);
    for (const auto& Y : tower) CHECK(marked_point_pairing(S, Y.curves) == marked_point_pairing(P));
    CHECK_THROWS(marked_point_pairing(S, {P.curves[0]}));
}

TEST_CASE("link component counts") {
    Pairing std3{{1, 2}, {3, 4}, {5, 6}};
    CHECK(link_component_count(std3, std3) == 3);
    CHECK(link_component_count(std3, {{1, 6}, {2, 3}, {4, 5}}) == 1);
    CHECK(link_component_count(std3, {{1, 4}, {2, 3}, {5, 6}}) == 2);
    CHECK(link_component_count({{1, 6}, {2, 3}, {4, 5}}, std3) == 1);
}

TEST_CASE("constructed splittings have the requested component count") {
    for (auto [g, b, c] : {std::tuple{0, 3, 1}, {0, 4, 2}, {1, 1, 1}, {1, 3, 3}, {2, 2, 1}}) {
        CAPTURE(g);
        CAPTURE(b);
        CAPTURE(c);
        SplittingDescriptor sd = construct_high_distance_splitting(g, b, c, 1, false);
        CHECK(sd.components == c);
        CHECK_FALSE(sd.certificate.has_value());
    }
    CHECK_THROWS_AS(construct_high_distance_splitting(0, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_high_distance_splitting(2, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("splitting carries a passing certificate") {
    SplittingDescriptor sd = construct_high_distance_splitting(0, 3, 1, 1);
    REQUIRE(sd.certificate.has_value());
    CHECK(check_certificate(*sd.certificate).pass);
    CHECK(sd.distance >= 1);
}

TEST_CASE("disk detection") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    DiskVerdict v = bounds_disk(S, P, P.curves[1]);
    CHECK(v.answer == DiskAnswer::Yes);
    REQUIRE(v.witness.has_value());
    CHECK(replay_witness(S, P, P.curves[1], *v.witness));

    CHECK(bounds_disk(S, P, seed_curve(S)).answer == DiskAnswer::No);
    auto tower = iterate_tower(S, P, seed_curve(S), 0);
    CHECK(bounds_disk(S, P, tower[0].curves[0]).answer == DiskAnswer::No);

    auto moves = disk_moves(S, P);
    REQUIRE_FALSE(moves.empty());
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        MultiCurve c = P.curves[rng() % P.size()];
        for (int j = 0; j < 3; ++j) c = apply_move(S, P, moves[rng() % moves.size()], c);
        DiskVerdict w = bounds_disk(S, P, c);
        CHECK(w.answer == DiskAnswer::Yes);
        if (w.witness) {
            CHECK(replay_witness(S, P, c, *w.witness));
            DiskWitness bad = *w.witness;
            bad.target = (bad.target + 1) % (int)P.size();
            CHECK_FALSE(replay_witness(S, P, c, bad));
        }
    }
    CHECK(std::string(disk_answer_name(DiskAnswer::Unknown)) == "unknown");
}

TEST_CASE("far disk curves") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    FarDiskCurve f = far_disk_curve(S, P, {1, 2}, 0);
    CHECK(f.pair_case);
    CHECK(f.level == 1);
    auto tower = iterate_tower(S, P, seed_curve(S), 0);
    CHECK(f.curve.w == twist_encoding(S, lam_sum(tower[0].curves), 2)(P.curves[0]).w);
    CHECK(enclosed_points(S, f.curve) == std::vector<int>{1, 2});

    FarDiskCurve h = far_disk_curve(S, P, {2, 4, 5}, 0);
    CHECK_FALSE(h.pair_case);
    CHECK(h.level == 2);
    CHECK(enclosed_points(S, h.curve) == std::vector<int>{2, 4, 5});
    CHECK_THROWS(far_disk_curve(S, P, {1}, 0));
}

TEST_CASE("tangle extension") {
    SplittingDescriptor sd = construct_high_distance_splitting(2, 2, 1, 1, false);
    TangleDescriptor t = extend_to_tangle(sd, BoundarySpec{{1}, 2}, BoundarySpec{{1}, 2});
    CHECK(t.crossings == 4);
    for (const auto& [name, ok] : t.conditions) CHECK_MESSAGE(ok, name);
    CHECK_THROWS_AS(extend_to_tangle(sd, BoundarySpec{{3}, 0}, BoundarySpec{{0}, 0}), std::invalid_argument);
}
