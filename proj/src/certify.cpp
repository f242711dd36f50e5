#include "hds/certify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hds {

Int max_norm(const MultiCurve& c) {
    Int m = 0;
    for (const auto& x : c.w) m = std::max(m, Int(abs(x)));
    return m;
}

namespace {

struct Min {
    std::optional<Int> v;
    void add(const Int& x) {
        if (!v || x < *v) v = x;
    }
    Int get() const { return v.value_or(0); }
};

bool connected_essential(const Surface& S, const MultiCurve& c) {
    if (c.empty() || is_peripheral(c)) return false;
    auto comps = curve_components(c);
    return comps.size() == 1 && comps[0].second == 1 && !comps[0].first.empty() && !is_peripheral(comps[0].first) && S.model != Model::Degenerate;
}

Int seam_of(const Surface& S, const PantsDecomposition& Q, const MultiCurve& c) { return min_seam(classify_arcs(S, Q, c)); }

// Same curves up to order.
bool same_set(const std::vector<MultiCurve>& a, const std::vector<MultiCurve>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size() && !hit; ++j)
            if (!used[j] && x.w == b[j].w) used[j] = hit = true;
        if (!hit) return false;
    }
    return true;
}

struct Inputs {
    const Surface& S;
    const PantsDecomposition& P;
    const std::optional<PantsDecomposition>& Pp;
    const MultiCurve& seed;
    const std::vector<std::vector<MultiCurve>>& tower;
    const std::vector<std::optional<PantsDecomposition>>& levels; // census of each Y^i, when valid
};

ObligationRecord o1(const Inputs& in) {
    ObligationRecord r{"O1", "seed is 1-seamed w.r.t. P and meets D in the designated arc", {}, false};
    Int s = seam_of(in.S, in.P, in.seed);
    r.counts.push_back({"min_seam", s});
    r.pass = s >= 1;
    if (in.S.disk_boundary) {
        Int d = disk_arc_count(in.S, in.seed);
        r.counts.push_back({"disk_arcs", d});
        r.pass = r.pass && d == 1;
    }
    return r;
}

ObligationRecord o2(const Inputs& in) {
    ObligationRecord r{"O2", "consecutive tower levels are mutually 2-seamed", {}, true};
    Min prev_cur, cur_prev;
    for (std::size_t i = 1; i < in.tower.size(); ++i) {
        if (!in.levels[i] || !in.levels[i - 1]) {
            r.counts.push_back({"invalid_level", Int((long)(in.levels[i] ? i - 1 : i))});
            r.pass = false;
            continue;
        }
        for (const auto& y : in.tower[i - 1]) prev_cur.add(seam_of(in.S, *in.levels[i], y));
        for (const auto& y : in.tower[i]) cur_prev.add(seam_of(in.S, *in.levels[i - 1], y));
    }
    if (prev_cur.v) r.counts.push_back({"min_previous_vs_level", prev_cur.get()});
    if (cur_prev.v) r.counts.push_back({"min_level_vs_previous", cur_prev.get()});
    r.pass = r.pass && prev_cur.get() >= 2 && cur_prev.get() >= 2;
    if (in.tower.size() < 2) r.pass = true;
    return r;
}

ObligationRecord o3(const Inputs& in) {
    ObligationRecord r{"O3", "every P-curve meets every tower curve at least twice", {}, false};
    Min m;
    for (const auto& level : in.tower)
        for (const auto& y : level)
            for (const auto& x : class_crossings(in.S, in.P, y)) m.add(x);
    r.counts.push_back({"min_intersection", m.get()});
    r.pass = m.get() >= 2;
    return r;
}

ObligationRecord o4(const Inputs& in) {
    ObligationRecord r{"O4", "each tower curve circles every curve of the previous level at least twice w.r.t. P", {}, false};
    Min m;
    for (std::size_t i = 0; i < in.tower.size(); ++i) {
        std::vector<MultiCurve> prev = i == 0 ? std::vector<MultiCurve>{in.seed} : in.tower[i - 1];
        for (const auto& y : in.tower[i])
            for (const auto& x : prev) m.add(Int(circling_number(in.S, y, x, in.P.curves)));
    }
    r.counts.push_back({"min_circling", m.get()});
    r.pass = m.get() >= 2;
    return r;
}

ObligationRecord o5(const Inputs& in) {
    ObligationRecord r{"O5", "top level meets D in at least two seed arcs and is 2-seamed w.r.t. P'", {}, false};
    if (!in.Pp) {
        r.counts.push_back({"invalid_upper", 1});
        return r;
    }
    Min arcs, seams;
    for (const auto& y : in.tower.back()) {
        if (in.S.disk_boundary) arcs.add(disk_arc_count(in.S, y));
        seams.add(seam_of(in.S, *in.Pp, y));
    }
    r.pass = seams.get() >= 2;
    if (arcs.v) {
        r.counts.push_back({"min_disk_arcs", arcs.get()});
        r.pass = r.pass && arcs.get() >= 2;
    }
    r.counts.push_back({"min_seam_upper", seams.get()});
    return r;
}

ObligationRecord o6(const Inputs& in) {
    ObligationRecord r{"O6", "P and every tower level are mutually 2-seamed", {}, true};
    Min p_y, y_p;
    for (std::size_t i = 0; i < in.tower.size(); ++i) {
        if (!in.levels[i]) {
            r.counts.push_back({"invalid_level", Int((long)i)});
            r.pass = false;
            continue;
        }
        for (const auto& p : in.P.curves) p_y.add(seam_of(in.S, *in.levels[i], p));
        for (const auto& y : in.tower[i]) y_p.add(seam_of(in.S, in.P, y));
    }
    r.counts.push_back({"min_P_vs_level", p_y.get()});
    r.counts.push_back({"min_level_vs_P", y_p.get()});
    r.pass = r.pass && p_y.get() >= 2 && y_p.get() >= 2;
    return r;
}

std::vector<ObligationRecord> obligations(const Inputs& in) {
    std::vector<ObligationRecord> out;
    using Fn = ObligationRecord (*)(const Inputs&);
    const std::pair<const char*, Fn> all[] = {{"O1", o1}, {"O2", o2}, {"O3", o3}, {"O4", o4}, {"O5", o5}, {"O6", o6}};
    for (const auto& [name, fn] : all) {
        try {
            out.push_back(fn(in));
        } catch (const std::exception& e) {
            out.push_back({name, std::string("could not be evaluated: ") + e.what(), {}, false});
        }
    }
    return out;
}

std::optional<PantsDecomposition> census_of(const Surface& S, const std::vector<MultiCurve>& curves) {
    Census c = piece_census(S, curves);
    if (!c.valid) return std::nullopt;
    PantsDecomposition d{curves, std::vector<std::string>(curves.size()), std::move(c.classes), std::move(c.pieces)};
    return d;
}

} // namespace

DistanceCertificate build_certificate(int g, int b, const std::vector<int>& blocks, int n, const CertifyOptions& opt) {
    if (n < 0) throw std::invalid_argument("claimed bound must be nonnegative");
    Surface S = build_surface(g, 2 * b);
    check_surface_hypotheses(S);
    DistanceCertificate cert;
    cert.ms = S.ms;
    cert.blocks = blocks;
    cert.n = n;
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    PantsDecomposition Pp = induced_decomposition(S, Flavor::Warped, blocks);
    cert.P = P.curves;
    cert.Pprime = Pp.curves;
    cert.seed = seed_curve(S);
    auto tower = iterate_tower(S, P, cert.seed, n, opt.limits);
    std::vector<std::optional<PantsDecomposition>> levels;
    for (auto& lvl : tower) {
        cert.tower.push_back(lvl.curves);
        levels.push_back(lvl);
    }
    std::optional<PantsDecomposition> upper = Pp;
    Inputs in{S, P, upper, cert.seed, cert.tower, levels};
    cert.obligations = obligations(in);
    cert.obligations.insert(cert.obligations.begin(), {"S", "structure: surface, decompositions, tower shape", {{"levels", Int(n + 1)}}, true});
    return cert;
}

CheckReport check_certificate(const DistanceCertificate& cert) {
    CheckReport rep;
    auto fail = [&](const std::string& name, const std::string& msg) {
        if (std::find(rep.failed.begin(), rep.failed.end(), name) == rep.failed.end()) rep.failed.push_back(name);
        rep.messages.push_back(name + ": " + msg);
    };

    Surface S;
    try {
        S = build_surface(cert.ms.genus, cert.ms.marked);
        check_surface_hypotheses(S);
    } catch (const std::exception& e) {
        fail("S", e.what());
        return rep;
    }
    ObligationRecord st{"S", "structure: surface, decompositions, tower shape", {{"levels", Int((long)cert.tower.size())}}, true};
    auto bad = [&](const std::string& msg) {
        st.pass = false;
        fail("S", msg);
    };

    auto bind = [&](const MultiCurve& c, const std::string& what) -> std::optional<MultiCurve> {
        try {
            Normalized nc = normalize(S, c.w);
            if (sgn(nc.stripped) != 0 || !connected_essential(S, nc.curve)) {
                bad(what + " is not a connected essential curve");
                return std::nullopt;
            }
            return nc.curve;
        } catch (const std::exception& e) {
            bad(what + ": " + e.what());
            return std::nullopt;
        }
    };
    auto bind_all = [&](const std::vector<MultiCurve>& cs, const std::string& what) {
        std::vector<MultiCurve> out;
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (auto c = bind(cs[i], what + "[" + std::to_string(i) + "]")) out.push_back(*c);
        return out;
    };

    if (cert.n < 0) bad("negative claimed bound");
    if (cert.tower.size() != (std::size_t)cert.n + 1)
        bad("claimed bound " + std::to_string(cert.n) + " needs " + std::to_string(cert.n + 1) + " tower levels, found " + std::to_string(cert.tower.size()));
    if (cert.tower.empty()) {
        rep.recomputed.push_back(st);
        return rep;
    }

    std::vector<MultiCurve> Pc = bind_all(cert.P, "P"), Ppc = bind_all(cert.Pprime, "P'");
    std::optional<MultiCurve> seed = bind(cert.seed, "seed");
    std::vector<std::vector<MultiCurve>> tower;
    for (std::size_t i = 0; i < cert.tower.size(); ++i) tower.push_back(bind_all(cert.tower[i], "Y^" + std::to_string(i)));

    const int expect = expected_curve_count(S.ms);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    if (!same_set(Pc, P.curves)) bad("P is not the standard decomposition");
    std::optional<PantsDecomposition> Pp;
    try {
        Pp = induced_decomposition(S, Flavor::Warped, cert.blocks);
        if (!same_set(Ppc, Pp->curves)) bad("P' is not the decomposition warped by the recorded blocks");
        Pp = census_of(S, Ppc);
        if (!Pp) bad("P' is not a pants decomposition");
    } catch (const std::exception& e) {
        bad(std::string("blocks: ") + e.what());
        Pp.reset();
    }
    std::vector<std::optional<PantsDecomposition>> levels;
    for (std::size_t i = 0; i < tower.size(); ++i) {
        if ((int)tower[i].size() != expect) bad("Y^" + std::to_string(i) + " has " + std::to_string(tower[i].size()) + " curves, expected " + std::to_string(expect));
        levels.push_back(census_of(S, tower[i]));
    }
    rep.recomputed.push_back(st);
    if (!seed) return rep;

    Inputs in{S, P, Pp, *seed, tower, levels};
    for (auto& r : obligations(in)) {
        if (!r.pass) fail(r.name, "recomputed verdict fails: " + r.statement);
        rep.recomputed.push_back(std::move(r));
    }

    // stored records must agree with the recomputation
    for (const auto& mine : rep.recomputed) {
        const ObligationRecord* stored = nullptr;
        for (const auto& o : cert.obligations)
            if (o.name == mine.name) stored = &o;
        if (!stored) {
            fail(mine.name, "missing from the certificate");
            continue;
        }
        if (stored->pass != mine.pass) fail(mine.name, "stored verdict disagrees with the recomputation");
        if (stored->counts != mine.counts) fail(mine.name, "stored counts disagree with the recomputation");
    }
    for (const auto& o : cert.obligations) {
        bool known = false;
        for (const auto& mine : rep.recomputed) known = known || mine.name == o.name;
        if (!known) fail(o.name, "unknown obligation");
    }
    std::sort(rep.failed.begin(), rep.failed.end());
    rep.pass = rep.failed.empty();
    return rep;
}

// ---- bounded curve-graph search ----

namespace {

std::vector<MultiCurve> graph_neighbours(const Surface& S, const MultiCurve& c, const Int& cap) {
    std::vector<MultiCurve> out;
    const auto& sh = shorten(c);
    const TriPtr& T = sh.short_lam.T;
    Encoding back = sh.conjugator.inverse();
    std::map<Weights, bool> seen;
    for (int e = 0; e < T->zeta(); ++e) {
        Lamination cand = edge_curve(T, e);
        if (cand.empty() || is_peripheral(cand)) continue;
        if (curve_components(cand).size() != 1) continue;
        if (sgn(intersection(cand, sh.short_lam)) != 0 || cand.w == sh.short_lam.w) continue;
        MultiCurve m = back(cand);
        if (max_norm(m) > cap || seen.count(m.w)) continue;
        seen[m.w] = true;
        out.push_back(m);
    }
    (void)S;
    return out;
}

} // namespace

DistanceBound distance_upper_bound(const Surface& S, const std::vector<MultiCurve>& A, const std::vector<MultiCurve>& B, const Int& cap,
                                   std::size_t max_visited) {
    DistanceBound res;
    if (A.empty() || B.empty()) return res;
    struct Side {
        std::map<Weights, int> depth;
        std::vector<MultiCurve> all;
        std::vector<MultiCurve> frontier;
        int layer = 0;
    } side[2];
    std::optional<int> best;
    auto meet = [&](int s, const MultiCurve& v, int dv) {
        for (const auto& u : side[1 - s].all) {
            int du = side[1 - s].depth.at(u.w);
            int len;
            if (u.w == v.w) len = dv + du;
            else if (sgn(geometric_intersection(S, u, v)) == 0) len = dv + du + 1;
            else continue;
            if (!best || len < *best) best = len;
        }
    };
    auto add = [&](int s, const MultiCurve& v, int d) {
        if (side[s].depth.count(v.w)) return false;
        side[s].depth[v.w] = d;
        meet(s, v, d);
        side[s].all.push_back(v);
        return true;
    };
    for (const auto& a : A)
        if (add(0, a, 0)) side[0].frontier.push_back(a);
    for (const auto& b : B)
        if (add(1, b, 0)) side[1].frontier.push_back(b);
    while (true) {
        res.visited = side[0].all.size() + side[1].all.size();
        if (best && *best <= side[0].layer + side[1].layer + 1) break;
        if (res.visited > max_visited) break;
        int s = side[0].frontier.size() <= side[1].frontier.size() ? 0 : 1;
        if (side[s].frontier.empty()) s = 1 - s;
        if (side[s].frontier.empty()) break;
        std::vector<MultiCurve> next;
        const int d = side[s].layer + 1;
        for (const auto& v : side[s].frontier)
            for (auto& w : graph_neighbours(S, v, cap))
                if (add(s, w, d)) next.push_back(std::move(w));
        side[s].frontier = std::move(next);
        side[s].layer = d;
    }
    res.bound = best;
    return res;
}

} // namespace hds
