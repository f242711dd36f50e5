#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hds/json_io.hpp"
#include "hds/svg.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

using namespace hds;
using io::json;

namespace {

// every leaf must be a string, bool or null: numbers are written as decimal strings
bool no_numbers(const json& j) {
    if (j.is_number()) return false;
    if (j.is_structured())
        for (const auto& x : j)
            if (!no_numbers(x)) return false;
    return true;
}

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    std::string cmd = std::string(HDS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string tmp(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "hds_test_cli";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("documents carry a schema version and no raw numbers") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    for (const json& j : {io::curves_json(S.ms, P.curves, P.names), io::decomposition_json(S, P), io::complex_json(S),
                          io::certificate_json(build_certificate(0, 3, {6}, 1))}) {
        CHECK(j.at("schema_version") == io::kSchemaVersion);
        CHECK(no_numbers(j));
    }
}

TEST_CASE("integers round trip through strings") {
    Int big("123456789012345678901234567890");
    CHECK(io::int_json(big) == "123456789012345678901234567890");
    CHECK(io::int_from(io::int_json(big)) == big);
    CHECK_THROWS(io::int_from(json("12x")));
    CHECK_THROWS(io::int_from(json(5)));
}

TEST_CASE("curve files round trip") {
    Surface S = build_surface(1, 2);
    std::vector<MultiCurve> cs{seed_curve(S), S.named.at("a_0")};
    json j = io::curves_json(S.ms, cs, {"seed", "a"});
    io::CurveFile f = io::curves_from(j);
    CHECK(f.ms == S.ms);
    CHECK(f.names == std::vector<std::string>{"seed", "a"});
    auto bound = io::bind_curves(S, f);
    REQUIRE(bound.size() == 2);
    CHECK(bound[0].w == cs[0].w);
    CHECK(io::dump(io::canonical(j)) == io::dump(j));

    json bad = j;
    bad["curves"][0]["coordinates"][0] = "-1";
    CHECK_THROWS(io::bind_curves(S, io::curves_from(bad)));
    json unversioned = j;
    unversioned.erase("schema_version");
    CHECK_THROWS(io::curves_from(unversioned));
    CHECK_THROWS(io::require_kind(j, "certificate"));
}

TEST_CASE("certificates round trip and re-check") {
    DistanceCertificate c = build_certificate(2, 0, {}, 1);
    json j = io::certificate_json(c);
    DistanceCertificate back = io::certificate_from(j);
    CHECK(io::dump(io::certificate_json(back)) == io::dump(j));
    CHECK(check_certificate(back).pass);
    CHECK(io::content_id(j) == io::content_id(io::canonical(j)));
    CHECK(io::content_id(j).size() == 16);
}

TEST_CASE("svg rendering") {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    std::string svg = render_svg(S, {{"P", P.curves}, {"seed", {seed_curve(S)}}});
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t paths = 0, bundles = 0;
    for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++paths;
    for (const auto& c : P.curves) bundles += trace(c).bundles.size();
    bundles += trace(seed_curve(S)).bundles.size();
    CHECK(paths == bundles);
    CHECK(render_svg(S, {{"P", P.curves}}) == render_svg(S, {{"P", P.curves}}));
}

TEST_CASE("cli: construct, check and determinism") {
    std::string a = tmp("a.json"), b = tmp("b.json");
    REQUIRE(run("construct -g 0 -b 3 -c 1 -d 1 -o " + a).status == 0);
    REQUIRE(run("construct -g 0 -b 3 -c 1 -d 1 -o " + b).status == 0);
    std::ifstream fa(a), fb(b), ca(a + ".cert.json"), cb(b + ".cert.json");
    std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
    std::string xa((std::istreambuf_iterator<char>(ca)), {}), xb((std::istreambuf_iterator<char>(cb)), {});
    CHECK(sa == sb);
    CHECK(xa == xb);
    json d = json::parse(sa);
    CHECK(d.at("kind") == "splitting");
    CHECK(d.at("components") == "1");
    CHECK(run("check " + a + ".cert.json").status == 0);

    json cert = json::parse(xa);
    cert["claimed_bound"] = "2";
    std::string forged = tmp("forged.json");
    write(forged, io::dump(cert));
    CHECK(run("check " + forged).status == 1);
}

TEST_CASE("cli: curve operations") {
    std::string p = tmp("p.json"), s = tmp("s.json");
    REQUIRE(run("export -g 0 -b 3 --what decomposition -o " + p).status == 0);
    REQUIRE(run("export -g 0 -b 3 --what seed -o " + s).status == 0);
    CHECK(run("intersect " + p + " " + p).out == "0\n");
    CHECK(run("components " + p + " " + p).out == "3\n");
    CHECK(run("seams " + p + " " + s).status == 0);
    CHECK(run("twist " + s + " --about " + p + " -p 1").status == 0);
    CHECK(run("import " + p).out == run("import " + p).out);
    Run svg = run("render " + p + " " + s);
    CHECK(svg.status == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("cli: invalid input is rejected") {
    CHECK(run("construct -g 0 -b 2 -c 1 -d 1").status != 0);
    CHECK(run("construct -g 1 -b 2 -c 3 -d 1").status != 0);
    std::string junk = tmp("junk.json");
    write(junk, "{\"kind\": \"curves\"}");
    CHECK(run("import " + junk).status != 0);
}
