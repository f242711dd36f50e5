#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/pants.hpp"

using namespace hds;

TEST_CASE("complex has the right Euler characteristic") {
    for (int g = 0; g <= 3; ++g)
        for (int m = 0; m <= 8; m += 2) {
            Surface S = build_surface(g, m);
            CHECK(S.complex->euler_characteristic() == 2 - 2 * g);
            CHECK((int)S.marked_vertices.size() == m);
        }
}

TEST_CASE("marked points are labelled vertices of the coordinate triangulation") {
    Surface S = build_surface(1, 6);
    CHECK(S.model == Model::Direct);
    CHECK(S.points == 6);
    std::vector<int> tags = S.T->tags();
    std::sort(tags.begin(), tags.end());
    CHECK(tags == std::vector<int>{1, 2, 3, 4, 5, 6});
    for (int t = 0; t < S.T->num_triangles(); ++t) {
        auto tr = S.T->triangles()[t];
        CHECK(index_of(tr[0]) != index_of(tr[1]));
        CHECK(index_of(tr[1]) != index_of(tr[2]));
    }
}

TEST_CASE("path arcs join consecutive points") {
    Surface S = build_surface(0, 6);
    REQUIRE(S.path.size() == 6);
    for (int k = 1; k <= 5; ++k) {
        CHECK(has_distinct_endpoints(S.path[k]));
        auto side = point_sides(S, path_boundary(S, k, k));
        CHECK(side[k] == side[k + 1]);
        for (int p = 1; p <= 6; ++p)
            if (p != k && p != k + 1) CHECK(side[p] != side[k]);
    }
}

TEST_CASE("designated disk boundary exists exactly when genus and points are positive") {
    CHECK_FALSE(build_surface(0, 6).disk_boundary.has_value());
    CHECK(build_surface(1, 2).disk_boundary.has_value());
    CHECK(build_surface(2, 4).disk_boundary.has_value());
    CHECK_FALSE(build_surface(2, 0).disk_boundary.has_value());
    // D contains every marked point
    Surface S = build_surface(1, 4);
    auto side = point_sides(S, *S.disk_boundary);
    for (int p = 2; p <= 4; ++p) CHECK(side[p] == side[1]);
}

TEST_CASE("models") {
    CHECK(build_surface(0, 0).model == Model::Degenerate);
    CHECK(build_surface(0, 2).model == Model::Degenerate);
    CHECK_FALSE(build_surface(0, 4).constructible);
    CHECK(build_surface(2, 0).model == Model::Hyperelliptic);
    CHECK(build_surface(2, 0).points == 6);
    CHECK(build_surface(3, 0).points == 8);
    CHECK(build_surface(1, 0).model == Model::Direct);
    CHECK(std::string(model_name(Model::Direct)) == "direct");
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(build_surface(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_surface(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_surface(0, -2), std::invalid_argument);
}

TEST_CASE("construction hypotheses") {
    CHECK_THROWS_AS(check_surface_hypotheses(build_surface(0, 4)), std::invalid_argument);
    CHECK_THROWS_AS(check_surface_hypotheses(build_surface(1, 0)), std::invalid_argument);
    CHECK_NOTHROW(check_surface_hypotheses(build_surface(0, 6)));
    CHECK_NOTHROW(check_surface_hypotheses(build_surface(1, 2)));
    CHECK_NOTHROW(check_surface_hypotheses(build_surface(2, 0)));
}

TEST_CASE("standard torus curves meet once") {
    Surface S = build_surface(1, 0);
    CHECK(intersection(S.named.at("a_0"), S.named.at("b_0")) == 1);
}
