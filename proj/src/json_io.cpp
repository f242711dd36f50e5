#include "hds/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace hds::io {

json document(const std::string& kind) {
    json j = json::object();
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string content_id(const json& j) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

void require_kind(const json& j, const std::string& kind) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
        throw std::invalid_argument(std::string("unsupported or missing schema_version (expected ") + kSchemaVersion + ")");
    if (!j.contains("kind") || j["kind"] != kind) throw std::invalid_argument("expected a document of kind '" + kind + "'");
}

json int_json(const Int& x) { return dec(x); }

Int int_from(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("numbers must be decimal strings");
    return parse_int(j.get<std::string>());
}

int small_from(const json& j, const char* what) {
    Int x = int_from(j);
    if (!x.fits_sint_p()) throw std::invalid_argument(std::string(what) + " out of range");
    return (int)x.get_si();
}

json weights_json(const Weights& w) {
    json a = json::array();
    for (const auto& x : w) a.push_back(dec(x));
    return a;
}

Weights weights_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coordinates must be an array of decimal strings");
    Weights w;
    for (const auto& x : j) w.push_back(int_from(x));
    return w;
}

json surface_json(const MarkedSurface& ms) { return {{"genus", std::to_string(ms.genus)}, {"marked_points", std::to_string(ms.marked)}}; }

MarkedSurface surface_from(const json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("marked_points")) throw std::invalid_argument("surface needs genus and marked_points");
    return {small_from(j["genus"], "genus"), small_from(j["marked_points"], "marked_points")};
}

json triangulation_json(const Triangulation& T) {
    json tris = json::array(), verts = json::array(), tags = json::array();
    for (const auto& t : T.triangles()) tris.push_back({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
    for (int v = 0; v < T.num_vertices(); ++v) {
        json cyc = json::array();
        for (Label l : T.vertices()[v]) cyc.push_back(std::to_string(l));
        verts.push_back(cyc);
        tags.push_back(std::to_string(T.tag(v)));
    }
    return {{"edges", std::to_string(T.zeta())}, {"triangles", tris}, {"vertex_cycles", verts}, {"vertex_tags", tags},
            {"euler_characteristic", std::to_string(T.euler_characteristic())}};
}

json complex_json(const Surface& S) {
    json j = document("complex");
    j["surface"] = surface_json(S.ms);
    j["model"] = model_name(S.model);
    j["complex"] = triangulation_json(*S.complex);
    j["coordinates"] = triangulation_json(*S.T);
    json mv = json::array();
    for (int v : S.marked_vertices) mv.push_back(std::to_string(v));
    j["marked_vertices"] = mv;
    json arcs = json::array();
    if (S.model == Model::Direct)
        for (std::size_t k = 1; k < S.path.size(); ++k) arcs.push_back(weights_json(S.path[k].w));
    j["disk"] = {{"path_arcs", arcs}, {"boundary", S.disk_boundary ? weights_json(S.disk_boundary->w) : json(nullptr)}};
    return j;
}

json curves_json(const MarkedSurface& ms, const std::vector<MultiCurve>& curves, const std::vector<std::string>& names) {
    json j = document("curves");
    j["surface"] = surface_json(ms);
    json a = json::array();
    for (std::size_t i = 0; i < curves.size(); ++i)
        a.push_back({{"name", i < names.size() ? names[i] : "c" + std::to_string(i)}, {"coordinates", weights_json(curves[i].w)}});
    j["curves"] = a;
    return j;
}

CurveFile curves_from(const json& j) {
    require_kind(j, "curves");
    CurveFile f;
    f.ms = surface_from(j.at("surface"));
    for (const auto& c : j.at("curves")) {
        f.names.push_back(c.at("name").get<std::string>());
        f.curves.push_back(weights_from(c.at("coordinates")));
    }
    return f;
}

std::vector<MultiCurve> bind_curves(const Surface& S, const CurveFile& f) {
    if (!(f.ms == S.ms)) throw std::invalid_argument("curve file belongs to a different surface");
    std::vector<MultiCurve> out;
    for (std::size_t i = 0; i < f.curves.size(); ++i) {
        try {
            normalize(S, f.curves[i]); // validation only; the file keeps what was given
            out.push_back({S.T, f.curves[i]});
        } catch (const std::exception& e) {
            throw std::invalid_argument("curve '" + f.names[i] + "': " + e.what());
        }
    }
    return out;
}

namespace {

json pieces_json(const PantsDecomposition& P) {
    json classes = json::array(), pieces = json::array();
    for (const auto& c : P.classes) classes.push_back({{"curve", std::to_string(c.curve)}, {"share", std::to_string(c.share)}});
    for (const auto& pc : P.pieces) {
        json slots = json::array(), pts = json::array();
        for (int s : pc.slots) slots.push_back(std::to_string(s));
        for (int p : pc.points) pts.push_back(std::to_string(p));
        pieces.push_back({{"kind", piece_kind_name(pc.kind)}, {"slots", slots}, {"points", pts}, {"euler", std::to_string(pc.euler)}});
    }
    return {{"classes", classes}, {"pieces", pieces}};
}

json curve_list(const std::vector<MultiCurve>& cs, const std::vector<std::string>& names) {
    json a = json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        json e = {{"coordinates", weights_json(cs[i].w)}};
        if (i < names.size() && !names[i].empty()) e["name"] = names[i];
        a.push_back(e);
    }
    return a;
}

std::pair<std::vector<MultiCurve>, std::vector<std::string>> curve_list_from(const Surface& S, const json& a) {
    std::vector<MultiCurve> cs;
    std::vector<std::string> names;
    for (const auto& e : a) {
        Weights w = weights_from(e.at("coordinates"));
        if ((int)w.size() != S.T->zeta()) throw std::invalid_argument("coordinate vector has the wrong length");
        cs.push_back({S.T, w});
        names.push_back(e.contains("name") ? e["name"].get<std::string>() : "");
    }
    return {cs, names};
}

std::vector<MultiCurve> plain_list_from(const Surface& S, const json& a) {
    std::vector<MultiCurve> out;
    for (const auto& e : a) out.push_back({S.T, weights_from(e)});
    return out;
}

json plain_list(const std::vector<MultiCurve>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(weights_json(c.w));
    return a;
}

json int_list(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(std::to_string(x));
    return a;
}

std::vector<int> int_list_from(const json& a) {
    std::vector<int> v;
    for (const auto& x : a) v.push_back(small_from(x, "integer"));
    return v;
}

json splitting_with_id(const Surface& S, const SplittingDescriptor& sd, const json& cert_id) {
    json j = document("splitting");
    j["surface"] = surface_json(sd.ms);
    j["genus"] = std::to_string(sd.ms.genus);
    j["bridges"] = std::to_string(sd.ms.bridges());
    j["components"] = std::to_string(sd.components);
    j["distance"] = std::to_string(sd.distance);
    j["blocks"] = int_list(sd.blocks);
    j["upper"] = decomposition_json(S, sd.upper);
    j["lower"] = decomposition_json(S, sd.lower);
    j["upper_pairing"] = pairing_json(sd.upper_pairing);
    j["lower_pairing"] = pairing_json(sd.lower_pairing);
    j["certificate_id"] = cert_id;
    return j;
}

} // namespace

json decomposition_json(const Surface& S, const PantsDecomposition& P) {
    json j = document("decomposition");
    j["surface"] = surface_json(S.ms);
    j["curves"] = curve_list(P.curves, P.names);
    json pc = pieces_json(P);
    j["classes"] = pc["classes"];
    j["pieces"] = pc["pieces"];
    return j;
}

json seam_profile_json(const PantsDecomposition& P, const SeamProfile& prof) {
    json a = json::array();
    for (const auto& pp : prof) {
        const auto& pc = P.pieces.at(pp.piece);
        json e = {{"piece", std::to_string(pp.piece)}, {"kind", piece_kind_name(pp.kind)}};
        json seams = json::array(), waves = json::array();
        if (pp.kind == PieceKind::Pants) {
            for (int i = 0; i < 3; ++i) {
                seams.push_back({{"between", {std::to_string(pc.slots[i]), std::to_string(pc.slots[(i + 1) % 3])}}, {"count", dec(pp.seams[i])}});
                waves.push_back({{"at", std::to_string(pc.slots[i])}, {"count", dec(pp.waves[i])}});
            }
        } else if (pp.kind == PieceKind::TwoMarkedDisk) {
            seams.push_back({{"between", {std::to_string(pc.slots[0]), std::to_string(pc.slots[0])}}, {"count", dec(pp.seams[0])}});
        }
        e["seams"] = seams;
        e["waves"] = waves;
        a.push_back(e);
    }
    json j = document("seam_profile");
    j["pieces"] = a;
    j["min_seam"] = dec(min_seam(prof));
    j["has_wave"] = has_wave(prof);
    return j;
}

json traced_json(const TracedCurve& t) {
    json a = json::array();
    for (const auto& b : t.bundles)
        a.push_back({{"triangle", std::to_string(b.triangle)},
                     {"from", std::to_string(b.from)},
                     {"to", std::to_string(b.to)},
                     {"weight", dec(b.weight)},
                     {"from_offset", dec(b.from_offset)},
                     {"to_offset", dec(b.to_offset)}});
    return a;
}

json pairing_json(const Pairing& p) {
    json a = json::array();
    for (auto [x, y] : p) a.push_back({std::to_string(x), std::to_string(y)});
    return a;
}

Pairing pairing_from(const json& j) {
    Pairing p;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("pairing entries must be label pairs");
        p.push_back({small_from(e[0], "label"), small_from(e[1], "label")});
    }
    return p;
}

json obligation_json(const ObligationRecord& o) {
    json counts = json::array();
    for (const auto& [k, v] : o.counts) counts.push_back({{"name", k}, {"value", dec(v)}});
    return {{"name", o.name}, {"statement", o.statement}, {"counts", counts}, {"pass", o.pass}};
}

namespace {

ObligationRecord obligation_from(const json& j) {
    ObligationRecord o;
    o.name = j.at("name").get<std::string>();
    o.statement = j.at("statement").get<std::string>();
    for (const auto& c : j.at("counts")) o.counts.push_back({c.at("name").get<std::string>(), int_from(c.at("value"))});
    o.pass = j.at("pass").get<bool>();
    return o;
}

} // namespace

json certificate_json(const DistanceCertificate& c) {
    json j = document("certificate");
    j["engine_version"] = kEngineVersion;
    j["twist_convention"] = kTwistConvention;
    j["surface"] = surface_json(c.ms);
    j["blocks"] = int_list(c.blocks);
    j["claimed_bound"] = std::to_string(c.n);
    j["P"] = plain_list(c.P);
    j["P_prime"] = plain_list(c.Pprime);
    j["seed"] = weights_json(c.seed.w);
    json tower = json::array();
    for (const auto& lvl : c.tower) tower.push_back(plain_list(lvl));
    j["tower"] = tower;
    json obs = json::array();
    for (const auto& o : c.obligations) obs.push_back(obligation_json(o));
    j["obligations"] = obs;
    return j;
}

DistanceCertificate certificate_from(const json& j) {
    require_kind(j, "certificate");
    DistanceCertificate c;
    try {
        c.ms = surface_from(j.at("surface"));
        Surface S = build_surface(c.ms.genus, c.ms.marked);
        c.blocks = int_list_from(j.at("blocks"));
        c.n = small_from(j.at("claimed_bound"), "claimed_bound");
        c.P = plain_list_from(S, j.at("P"));
        c.Pprime = plain_list_from(S, j.at("P_prime"));
        c.seed = {S.T, weights_from(j.at("seed"))};
        for (const auto& lvl : j.at("tower")) c.tower.push_back(plain_list_from(S, lvl));
        for (const auto& o : j.at("obligations")) c.obligations.push_back(obligation_from(o));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
    return c;
}

json check_report_json(const CheckReport& r) {
    json j = document("check_report");
    j["verdict"] = r.pass ? "pass" : "fail";
    j["failed"] = r.failed;
    j["messages"] = r.messages;
    json obs = json::array();
    for (const auto& o : r.recomputed) obs.push_back(obligation_json(o));
    j["recomputed"] = obs;
    return j;
}

json disk_verdict_json(const DiskVerdict& v) {
    json j = document("disk_verdict");
    j["answer"] = disk_answer_name(v.answer);
    j["reason"] = v.reason;
    j["explored"] = std::to_string(v.explored);
    if (v.witness) {
        json moves = json::array();
        for (const auto& m : v.witness->moves) moves.push_back({{"kind", m.kind}, {"index", std::to_string(m.index)}, {"power", std::to_string(m.power)}});
        j["witness"] = {{"moves", moves}, {"target", std::to_string(v.witness->target)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json splitting_json(const Surface& S, const SplittingDescriptor& sd) {
    return splitting_with_id(S, sd, sd.certificate ? json(content_id(certificate_json(*sd.certificate))) : json(nullptr));
}

json tangle_json(const TangleDescriptor& t) {
    json j = document("tangle");
    j["surface"] = surface_json(t.ms);
    auto spec = [](const BoundarySpec& b) { return json{{"genera", int_list(b.genera)}, {"marked_points", std::to_string(b.marked)}}; };
    auto side = [](const TangleSide& s) { return json{{"removed_loops", int_list(s.removed_loops)}, {"vertical_arcs", int_list(s.vertical_arcs)}}; };
    j["S"] = spec(t.S);
    j["S_prime"] = spec(t.Sprime);
    j["upper"] = side(t.upper);
    j["lower"] = side(t.lower);
    j["crossings"] = std::to_string(t.crossings);
    json conds = json::array();
    for (const auto& [name, ok] : t.conditions) conds.push_back({{"condition", name}, {"holds", ok}});
    j["conditions"] = conds;
    return j;
}

json growth_json(const SeamednessReport& r) {
    json j = document("seamedness_growth");
    j["k"] = dec(r.k);
    j["bound"] = dec(4 * r.k * r.k);
    j["precondition"] = r.precondition;
    j["gamma_vs_image"] = dec(r.gamma_vs_image);
    j["image_vs_P"] = dec(r.image_vs_P);
    j["P_vs_image"] = dec(r.P_vs_image);
    j["bullets"] = {r.bullet1, r.bullet2, r.bullet3};
    return j;
}

json tower_json(const Surface& S, const std::vector<PantsDecomposition>& levels) {
    json doc = document("tower");
    doc["surface"] = surface_json(S.ms);
    doc["twist_convention"] = kTwistConvention;
    json a = json::array();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        // fresh census so the piece order depends only on the curves
        json lv = decomposition_json(S, make_decomposition(S, levels[i].curves, levels[i].names));
        lv.erase("schema_version");
        lv.erase("kind");
        lv.erase("surface");
        lv["level"] = std::to_string(i);
        lv["pairing"] = pairing_json(marked_point_pairing(S, levels[i].curves));
        a.push_back(lv);
    }
    doc["levels"] = a;
    return doc;
}

json canonical(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("not a document: missing kind");
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    try {
        if (kind == "curves") {
            CurveFile f = curves_from(j);
            Surface S = build_surface(f.ms.genus, f.ms.marked);
            return curves_json(f.ms, bind_curves(S, f), f.names);
        }
        if (kind == "certificate") return certificate_json(certificate_from(j));
        if (kind == "complex") {
            require_kind(j, kind);
            MarkedSurface ms = surface_from(j.at("surface"));
            json c = complex_json(build_surface(ms.genus, ms.marked));
            if (c != j) throw std::invalid_argument("complex does not match the canonical complex of this surface");
            return c;
        }
        if (kind == "decomposition") {
            require_kind(j, kind);
            MarkedSurface ms = surface_from(j.at("surface"));
            Surface S = build_surface(ms.genus, ms.marked);
            auto [cs, names] = curve_list_from(S, j.at("curves"));
            return decomposition_json(S, make_decomposition(S, cs, names));
        }
        if (kind == "tower") {
            require_kind(j, kind);
            MarkedSurface ms = surface_from(j.at("surface"));
            Surface S = build_surface(ms.genus, ms.marked);
            std::vector<PantsDecomposition> levels;
            for (const auto& lv : j.at("levels")) {
                auto [cs, names] = curve_list_from(S, lv.at("curves"));
                levels.push_back(make_decomposition(S, cs, names));
            }
            return tower_json(S, levels);
        }
        if (kind == "splitting") {
            require_kind(j, kind);
            SplittingDescriptor sd;
            sd.ms = surface_from(j.at("surface"));
            Surface S = build_surface(sd.ms.genus, sd.ms.marked);
            sd.blocks = int_list_from(j.at("blocks"));
            sd.distance = small_from(j.at("distance"), "distance");
            auto [uc, un] = curve_list_from(S, j.at("upper").at("curves"));
            auto [lc, ln] = curve_list_from(S, j.at("lower").at("curves"));
            sd.upper = make_decomposition(S, uc, un);
            sd.lower = make_decomposition(S, lc, ln);
            sd.upper_pairing = marked_point_pairing(sd.upper);
            sd.lower_pairing = marked_point_pairing(sd.lower);
            sd.components = link_component_count(sd.upper_pairing, sd.lower_pairing);
            if (pairing_from(j.at("upper_pairing")) != sd.upper_pairing || pairing_from(j.at("lower_pairing")) != sd.lower_pairing)
                throw std::invalid_argument("stored pairings disagree with the decompositions");
            if (small_from(j.at("components"), "components") != sd.components) throw std::invalid_argument("stored component count disagrees with the pairings");
            return splitting_with_id(S, sd, j.at("certificate_id"));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed " + kind + " document: " + e.what());
    }
    throw std::invalid_argument("cannot import documents of kind '" + kind + "'");
}

} // namespace hds::io
