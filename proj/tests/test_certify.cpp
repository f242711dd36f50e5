#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/certify.hpp"

#include <algorithm>
#include <functional>
#include <map>

using namespace hds;

namespace {
bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }
}

TEST_CASE("certificates pass for small claims") {
    for (auto [g, b, n] : {std::tuple{0, 3, 2}, {2, 0, 1}, {1, 1, 1}, {1, 2, 1}}) {
        CAPTURE(g);
        CAPTURE(b);
        std::vector<int> blocks = b ? default_blocks(b, 1) : std::vector<int>{};
        DistanceCertificate c = build_certificate(g, b, blocks, n);
        CHECK(c.tower.size() == (std::size_t)n + 1);
        for (const auto& o : c.obligations) CHECK_MESSAGE(o.pass, o.name);
        CheckReport r = check_certificate(c);
        CHECK(r.pass);
        CHECK(r.failed.empty());
    }
}

TEST_CASE("obligation counts") {
    DistanceCertificate c = build_certificate(0, 3, {6}, 1);
    std::map<std::string, std::map<std::string, Int>> counts;
    for (const auto& o : c.obligations)
        for (const auto& [k, v] : o.counts) counts[o.name][k] = v;
    CHECK(counts["S"]["levels"] == 2);
    CHECK(counts["O1"]["min_seam"] == 1);
    CHECK(counts["O2"]["min_previous_vs_level"] >= 4);
    CHECK(counts["O3"]["min_intersection"] >= 8);
    CHECK(counts["O4"]["min_circling"] == 2);
}

TEST_CASE("corrupted certificates are rejected") {
    const DistanceCertificate base = build_certificate(0, 3, {6}, 2);
    std::vector<std::tuple<std::function<void(DistanceCertificate&)>, std::vector<std::string>>> cases = {
        {[](auto& c) { c.n += 1; }, {"S"}},
        {[](auto& c) { c.seed = c.P[1]; }, {"O1", "O4"}},
        {[](auto& c) {
             for (auto& o : c.obligations)
                 if (o.name == "O3") o.counts[0].second += 1;
         },
         {"O3"}},
        {[](auto& c) { std::swap(c.tower[1], c.tower[2]); }, {"O2", "O4", "O5"}},
        {[](auto& c) { c.ms.genus += 1; }, {"S"}},
        {[](auto& c) { c.tower[1] = c.tower[0]; }, {"O2", "O4"}},
    };
    for (auto& [mutate, expected] : cases) {
        DistanceCertificate c = base;
        mutate(c);
        CheckReport r = check_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.failed == expected);
    }
}

TEST_CASE("invalid certificate requests") {
    CHECK_THROWS_AS(build_certificate(0, 2, {4}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_certificate(0, 3, {4}, 1), std::invalid_argument);
    CHECK_THROWS(build_certificate(0, 3, {6}, -1));
}

TEST_CASE("distance upper bounds") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    CHECK(*distance_upper_bound(S, {P.curves[0]}, {P.curves[0]}, 64).bound == 0);
    CHECK(*distance_upper_bound(S, {P.curves[0]}, {P.curves[2]}, 64).bound == 1);
    auto far = distance_upper_bound(S, {P.curves[0]}, {path_boundary(S, 2, 2)}, 64);
    REQUIRE(far.bound.has_value());
    CHECK(*far.bound >= 2);
}
