#include "hds/json_io.hpp"
#include "hds/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hds;
using hds::io::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": not valid JSON (" + e.what() + ")");
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<int> parse_blocks(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

// Curves of a "curves", "decomposition" or "splitting" (upper side) document.
std::pair<Surface, std::vector<MultiCurve>> load_curves(const std::string& path) {
    json j = read_json(path);
    const std::string kind = j.value("kind", "");
    if (kind == "decomposition") {
        io::CurveFile f;
        f.ms = io::surface_from(j.at("surface"));
        for (const auto& c : j.at("curves")) {
            f.names.push_back(c.value("name", ""));
            f.curves.push_back(io::weights_from(c.at("coordinates")));
        }
        Surface S = build_surface(f.ms.genus, f.ms.marked);
        return {S, io::bind_curves(S, f)};
    }
    io::CurveFile f = io::curves_from(j);
    Surface S = build_surface(f.ms.genus, f.ms.marked);
    return {S, io::bind_curves(S, f)};
}

PantsDecomposition load_decomposition(const std::string& path) {
    auto [S, cs] = load_curves(path);
    return make_decomposition(S, cs, std::vector<std::string>(cs.size()));
}

struct SurfaceArgs {
    int genus = 0, bridges = 3;
    void add(CLI::App* app) {
        app->add_option("--genus,-g", genus, "genus of the splitting surface")->check(CLI::NonNegativeNumber);
        app->add_option("--bridges,-b", bridges, "bridge number b (2b marked points)")->check(CLI::NonNegativeNumber);
    }
    json config() const { return {{"genus", std::to_string(genus)}, {"bridges", std::to_string(bridges)}}; }
};

json with_config(json doc, json config) {
    doc["config"] = std::move(config);
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bridge splittings of high distance: construction, certificates and curve tools"};
    app.require_subcommand(1);
    int status = 0;

    // construct
    SurfaceArgs c_surf;
    int c_comp = 1, c_dist = 1;
    std::size_t max_bits = 1u << 20;
    std::string c_out, c_cert;
    auto* construct = app.add_subcommand("construct", "build a high-distance splitting and its certificate");
    c_surf.add(construct);
    construct->add_option("--components,-c", c_comp, "link components c (1 <= c <= b; 0 when b = 0)")->check(CLI::NonNegativeNumber);
    construct->add_option("--distance,-d", c_dist, "distance bound d")->check(CLI::NonNegativeNumber);
    construct->add_option("--max-bits", max_bits, "resource cap on coordinate size in bits");
    construct->add_option("--out,-o", c_out, "descriptor JSON path (default stdout)");
    construct->add_option("--certificate", c_cert, "certificate JSON path (default: <out>.cert.json when --out is given)");
    construct->callback([&] {
        CertifyOptions opt;
        opt.limits.max_bits = max_bits;
        auto sd = construct_high_distance_splitting(c_surf.genus, c_surf.bridges, c_comp, c_dist, true, opt);
        Surface S = build_surface(c_surf.genus, 2 * c_surf.bridges);
        json cfg = c_surf.config();
        cfg["command"] = "construct";
        cfg["components"] = std::to_string(c_comp);
        cfg["distance"] = std::to_string(c_dist);
        cfg["max_bits"] = std::to_string(max_bits);
        json cert = with_config(io::certificate_json(*sd.certificate), cfg);
        json desc = with_config(io::splitting_json(S, sd), cfg);
        emit(io::dump(desc), c_out);
        std::string cert_path = !c_cert.empty() ? c_cert : (c_out.empty() || c_out == "-" ? "" : c_out + ".cert.json");
        if (!cert_path.empty()) emit(io::dump(cert), cert_path);
        auto rep = check_certificate(*sd.certificate);
        std::cerr << "components " << sd.components << ", certificate " << (rep.pass ? "pass" : "FAIL") << "\n";
        if (sd.components != c_comp || !rep.pass) status = 1;
    });

    // certify
    SurfaceArgs f_surf;
    int f_n = 1, f_comp = 1;
    std::string f_blocks, f_out;
    auto* certify = app.add_subcommand("certify", "build a distance certificate and re-check it");
    f_surf.add(certify);
    certify->add_option("--n,-n", f_n, "claimed distance bound")->check(CLI::NonNegativeNumber);
    certify->add_option("--blocks", f_blocks, "comma-separated even block sizes for P' (default: equal blocks for --components)");
    certify->add_option("--components,-c", f_comp, "components used for the default blocks")->check(CLI::PositiveNumber);
    certify->add_option("--max-bits", max_bits, "resource cap on coordinate size in bits");
    certify->add_option("--out,-o", f_out, "certificate JSON path (default stdout)");
    certify->callback([&] {
        std::vector<int> blocks = !f_blocks.empty() ? parse_blocks(f_blocks) : f_surf.bridges > 0 ? default_blocks(f_surf.bridges, f_comp) : std::vector<int>{};
        CertifyOptions opt;
        opt.limits.max_bits = max_bits;
        auto cert = build_certificate(f_surf.genus, f_surf.bridges, blocks, f_n, opt);
        json cfg = f_surf.config();
        cfg["command"] = "certify";
        cfg["n"] = std::to_string(f_n);
        cfg["blocks"] = json::array();
        for (int x : blocks) cfg["blocks"].push_back(std::to_string(x));
        cfg["max_bits"] = std::to_string(max_bits);
        emit(io::dump(with_config(io::certificate_json(cert), cfg)), f_out);
        auto rep = check_certificate(cert);
        std::cerr << io::dump(io::check_report_json(rep));
        status = rep.pass ? 0 : 1;
    });

    // check
    std::string k_file, k_report;
    auto* check = app.add_subcommand("check", "re-check a certificate file from its coordinates");
    check->add_option("certificate", k_file, "certificate JSON")->required()->check(CLI::ExistingFile);
    check->add_option("--report", k_report, "write the report here instead of stdout");
    check->callback([&] {
        auto rep = check_certificate(io::certificate_from(read_json(k_file)));
        emit(io::dump(io::check_report_json(rep)), k_report);
        if (!rep.pass) {
            std::cerr << "certificate FAILS:";
            for (const auto& f : rep.failed) std::cerr << " " << f;
            std::cerr << "\n";
        }
        status = rep.pass ? 0 : 1;
    });

    // components
    std::string m_upper, m_lower;
    auto* components = app.add_subcommand("components", "link component count of two decompositions");
    components->add_option("upper", m_upper, "upper decomposition (curves or decomposition JSON)")->required()->check(CLI::ExistingFile);
    components->add_option("lower", m_lower, "lower decomposition (curves or decomposition JSON)")->required()->check(CLI::ExistingFile);
    components->callback([&] {
        auto U = load_decomposition(m_upper), L = load_decomposition(m_lower);
        std::cout << link_component_count(marked_point_pairing(U), marked_point_pairing(L)) << "\n";
    });

    // intersect
    std::string i_a, i_b;
    auto* intersect = app.add_subcommand("intersect", "geometric intersection number of two curve files");
    intersect->add_option("a", i_a, "curve JSON")->required()->check(CLI::ExistingFile);
    intersect->add_option("b", i_b, "curve JSON")->required()->check(CLI::ExistingFile);
    intersect->callback([&] {
        auto [S, A] = load_curves(i_a);
        auto [S2, B] = load_curves(i_b);
        if (!(S.ms == S2.ms)) throw std::runtime_error("the two files live on different surfaces");
        for (auto& b : B) b = rebind(S.T, b);
        Int total = 0;
        for (const auto& a : A)
            for (const auto& b : B) total += geometric_intersection(S, a, b);
        std::cout << dec(total) << "\n";
    });

    // twist
    std::string t_curves, t_about, t_out;
    long t_power = 1;
    auto* twist = app.add_subcommand("twist", "apply a power of the multitwist about a curve file");
    twist->add_option("curves", t_curves, "curves to move")->required()->check(CLI::ExistingFile);
    twist->add_option("--about", t_about, "curves to twist about (pairwise disjoint)")->required()->check(CLI::ExistingFile);
    twist->add_option("--power,-p", t_power, "twist power (positive: " + std::string(kTwistConvention) + ")");
    twist->add_option("--out,-o", t_out, "output curve JSON (default stdout)");
    twist->callback([&] {
        auto [S, X] = load_curves(t_curves);
        auto [S2, Y] = load_curves(t_about);
        if (!(S.ms == S2.ms)) throw std::runtime_error("the two files live on different surfaces");
        for (auto& y : Y) y = rebind(S.T, y);
        json cfg = {{"command", "twist"}, {"power", std::to_string(t_power)}, {"convention", kTwistConvention}};
        emit(io::dump(with_config(io::curves_json(S.ms, dehn_twist(S, X, Y, t_power)), cfg)), t_out);
    });

    // seams
    std::string s_decomp, s_curve;
    auto* seams = app.add_subcommand("seams", "seam and wave profile of curves relative to a decomposition");
    seams->add_option("decomposition", s_decomp, "decomposition (curves or decomposition JSON)")->required()->check(CLI::ExistingFile);
    seams->add_option("curves", s_curve, "curves to classify")->required()->check(CLI::ExistingFile);
    seams->callback([&] {
        auto P = load_decomposition(s_decomp);
        auto [S, cs] = load_curves(s_curve);
        json out = io::document("seam_report");
        json a = json::array();
        for (auto& c : cs) a.push_back(io::seam_profile_json(P, classify_arcs(S, P, rebind(P.curves[0].T, c))));
        out["profiles"] = a;
        std::cout << io::dump(out);
    });

    // render
    SurfaceArgs r_surf;
    std::vector<std::string> r_files;
    std::string r_out;
    int r_strands = 8;
    auto* render = app.add_subcommand("render", "SVG picture of curves over the triangle model");
    r_surf.add(render);
    render->add_option("curves", r_files, "curve files, one colour each (default: standard decomposition and seed)");
    render->add_option("--strands", r_strands, "strands drawn per bundle")->check(CLI::PositiveNumber);
    render->add_option("--out,-o", r_out, "SVG path (default stdout)");
    render->callback([&] {
        std::vector<RenderInput> cols;
        Surface S = build_surface(r_surf.genus, 2 * r_surf.bridges);
        if (r_files.empty()) {
            auto P = induced_decomposition(S, Flavor::Standard);
            cols.push_back({"P", P.curves});
            cols.push_back({"seed", {seed_curve(S)}});
        }
        for (const auto& f : r_files) {
            auto [S2, cs] = load_curves(f);
            S = S2;
            cols.push_back({f, cs});
        }
        emit(render_svg(S, cols, r_strands), r_out);
    });

    // export
    SurfaceArgs e_surf;
    std::string e_what = "complex", e_blocks, e_out;
    int e_n = 0;
    auto* exp = app.add_subcommand("export", "write canonical JSON for a surface object");
    e_surf.add(exp);
    exp->add_option("--what", e_what, "complex | decomposition | warped | seed | tower | path")
        ->check(CLI::IsMember({"complex", "decomposition", "warped", "seed", "tower", "path"}));
    exp->add_option("--blocks", e_blocks, "blocks for --what warped");
    exp->add_option("--n,-n", e_n, "top level for --what tower")->check(CLI::NonNegativeNumber);
    exp->add_option("--out,-o", e_out, "output path (default stdout)");
    exp->callback([&] {
        Surface S = build_surface(e_surf.genus, 2 * e_surf.bridges);
        json doc;
        if (e_what == "complex") doc = io::complex_json(S);
        else if (e_what == "decomposition") doc = io::decomposition_json(S, induced_decomposition(S, Flavor::Standard));
        else if (e_what == "warped") {
            auto blocks = e_blocks.empty() ? default_blocks(S.bridges(), 1) : parse_blocks(e_blocks);
            doc = io::decomposition_json(S, induced_decomposition(S, Flavor::Warped, blocks));
        } else if (e_what == "seed") doc = io::curves_json(S.ms, {seed_curve(S)}, {"seed"});
        else if (e_what == "path") {
            std::vector<MultiCurve> cs;
            std::vector<std::string> names;
            for (int k = 1; k + 1 < (int)S.path.size(); k += 2) {
                cs.push_back(path_boundary(S, k, k));
                names.push_back("pair(" + std::to_string(k) + "," + std::to_string(k + 1) + ")");
            }
            doc = io::curves_json(S.ms, cs, names);
        } else {
            auto P = induced_decomposition(S, Flavor::Standard);
            doc = io::tower_json(S, iterate_tower(S, P, seed_curve(S), e_n));
        }
        emit(io::dump(doc), e_out);
    });

    // import
    std::string im_file, im_out;
    auto* imp = app.add_subcommand("import", "validate a JSON document and re-emit it canonically");
    imp->add_option("file", im_file, "document")->required()->check(CLI::ExistingFile);
    imp->add_option("--out,-o", im_out, "output path (default stdout)");
    imp->callback([&] { emit(io::dump(io::canonical(read_json(im_file))), im_out); });

    // disk
    std::string d_decomp, d_curve;
    std::size_t d_budget = 4000;
    auto* disk = app.add_subcommand("disk", "does a curve bound a disk in the handlebody of a decomposition");
    disk->add_option("decomposition", d_decomp, "decomposition (curves or decomposition JSON)")->required()->check(CLI::ExistingFile);
    disk->add_option("curve", d_curve, "curve JSON (first curve is used)")->required()->check(CLI::ExistingFile);
    disk->add_option("--budget", d_budget, "search budget (expanded curves)");
    disk->callback([&] {
        auto P = load_decomposition(d_decomp);
        auto [S, cs] = load_curves(d_curve);
        if (cs.empty()) throw std::runtime_error("no curve in " + d_curve);
        auto v = bounds_disk(S, P, rebind(P.curves[0].T, cs[0]), d_budget);
        std::cout << io::dump(io::disk_verdict_json(v));
    });

    // far-disk
    SurfaceArgs fd_surf;
    std::string fd_points;
    int fd_n = 0;
    auto* far = app.add_subcommand("far-disk", "curve bounding a disk around chosen points, far from the standard disk set");
    fd_surf.add(far);
    far->add_option("--points", fd_points, "comma-separated marked points")->required();
    far->add_option("--n,-n", fd_n, "distance target")->check(CLI::NonNegativeNumber);
    far->callback([&] {
        Surface S = build_surface(fd_surf.genus, 2 * fd_surf.bridges);
        auto P = induced_decomposition(S, Flavor::Standard);
        auto f = far_disk_curve(S, P, parse_blocks(fd_points), fd_n);
        json doc = io::curves_json(S.ms, {f.curve}, {"far_disk"});
        doc["config"] = {{"command", "far-disk"}, {"points", fd_points}, {"n", std::to_string(fd_n)}, {"level", std::to_string(f.level)}};
        std::cout << io::dump(doc);
    });

    // tangle
    SurfaceArgs tg_surf;
    std::string tg_sg, tg_spg;
    int tg_sm = 0, tg_spm = 0, tg_c = -1;
    auto* tangle = app.add_subcommand("tangle", "extend a splitting to a tangle between two boundary surfaces");
    tg_surf.add(tangle);
    tangle->add_option("--s-genera", tg_sg, "comma-separated genera of the components of S");
    tangle->add_option("--s-marked", tg_sm, "marked points on S")->check(CLI::NonNegativeNumber);
    tangle->add_option("--sprime-genera", tg_spg, "comma-separated genera of the components of S'");
    tangle->add_option("--sprime-marked", tg_spm, "marked points on S'")->check(CLI::NonNegativeNumber);
    tangle->add_option("--target-components", tg_c, "check the component range for this c");
    tangle->callback([&] {
        int comps = tg_surf.bridges > 0 ? 1 : 0;
        auto sd = construct_high_distance_splitting(tg_surf.genus, tg_surf.bridges, comps, 0, false);
        std::optional<int> target;
        if (tg_c >= 0) target = tg_c;
        auto t = extend_to_tangle(sd, {parse_blocks(tg_sg), tg_sm}, {parse_blocks(tg_spg), tg_spm}, target);
        std::cout << io::dump(io::tangle_json(t));
    });

    // distance
    std::string ds_a, ds_b, ds_cap = std::to_string(kDefaultDistanceCap);
    auto* distance = app.add_subcommand("distance", "bounded search for an upper bound on curve-graph distance");
    distance->add_option("a", ds_a, "curve JSON")->required()->check(CLI::ExistingFile);
    distance->add_option("b", ds_b, "curve JSON")->required()->check(CLI::ExistingFile);
    distance->add_option("--cap", ds_cap, "max-norm cap on visited curves");
    distance->callback([&] {
        auto [S, A] = load_curves(ds_a);
        auto [S2, B] = load_curves(ds_b);
        for (auto& b : B) b = rebind(S.T, b);
        auto r = distance_upper_bound(S, A, B, parse_int(ds_cap));
        if (r.bound) std::cout << *r.bound << "\n";
        else {
            std::cout << "none\n";
            status = 2;
        }
    });

    // growth
    SurfaceArgs gr_surf;
    int gr_k = 1;
    auto* growth = app.add_subcommand("growth", "check the seam growth inequalities for the seed (k = 1) or a tower curve (k = 2)");
    gr_surf.add(growth);
    growth->add_option("-k", gr_k, "1 or 2")->check(CLI::Range(1, 2));
    growth->callback([&] {
        Surface S = build_surface(gr_surf.genus, 2 * gr_surf.bridges);
        auto P = induced_decomposition(S, Flavor::Standard);
        MultiCurve gamma = seed_curve(S);
        if (gr_k == 2) gamma = iterate_tower(S, P, gamma, 0)[0].curves[0];
        auto r = seamedness_growth_report(S, P, gamma, gr_k);
        std::cout << io::dump(io::growth_json(r));
        status = r.ok() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
