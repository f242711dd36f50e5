#include "hds/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hds {

Normalized normalize(const Surface& S, const Weights& raw) {
    if ((int)raw.size() != S.T->zeta())
        throw std::invalid_argument("coordinate vector has " + std::to_string(raw.size()) + " entries, expected " + std::to_string(S.T->zeta()));
    for (const auto& x : raw)
        if (sgn(x) < 0) throw std::invalid_argument("invalid coordinates: negative entry");
    if (!is_admissible(S.T, raw)) throw std::invalid_argument("invalid coordinates: parity or triangle inequality violated");
    Lamination L{S.T, raw};
    if (L.empty()) return {L, 0};
    if (S.model == Model::Degenerate) {
        Int n = 0;
        for (const auto& c : components(L)) n += c.mult;
        return {{S.T, Weights(raw.size(), 0)}, n};
    }
    Int stripped = 0;
    for (const auto& c : components(L))
        if (c.peripheral) stripped += c.mult;
    Lamination p = peripheral_part(L);
    for (std::size_t i = 0; i < L.w.size(); ++i) L.w[i] -= p.w[i];
    return {L, stripped};
}

std::vector<std::pair<MultiCurve, Int>> curve_components(const MultiCurve& c) {
    std::vector<std::pair<MultiCurve, Int>> out;
    if (c.empty()) return out;
    for (const auto& comp : components(c)) {
        if (comp.is_arc) throw std::invalid_argument("expected a multicurve, found an arc component");
        out.push_back({comp.lam, comp.mult});
    }
    return out;
}

std::vector<int> point_sides(const Surface& S, const MultiCurve& curve) {
    std::vector<int> side(S.points + 1, 0);
    for (int k = 1; k < S.points; ++k) {
        Int i = intersection(curve, S.path[k]);
        side[k + 1] = side[k] ^ (int)mpz_odd_p(i.get_mpz_t());
    }
    return side;
}

LiftInfo lift_info(const Surface& S, const MultiCurve& c) {
    LiftInfo info;
    if (!S.hyperelliptic()) return info;
    auto side = point_sides(S, c);
    int n1 = 0;
    for (int k = 1; k <= S.points; ++k) n1 += side[k];
    int n0 = S.points - n1;
    info.sheets = n1 % 2 == 0 ? 2 : 1;
    info.two_point_side = std::min(n0, n1) == 2;
    info.classes = (info.sheets == 1 || info.two_point_side) ? 1 : 2;
    return info;
}

Int count_components(const Surface& S, const MultiCurve& c) {
    if (S.model == Model::Degenerate) return 0;
    Int n = 0;
    for (const auto& [comp, m] : curve_components(c)) n += m * lift_info(S, comp).classes;
    return n;
}

Int geometric_intersection(const Surface& S, const MultiCurve& x, const MultiCurve& y) {
    if (x.T->zeta() != y.T->zeta() || !x.T->same_as(*y.T)) throw std::invalid_argument("curves live on different complexes");
    if (S.model == Model::Degenerate || x.empty() || y.empty()) return 0;
    if (!S.hyperelliptic()) return intersection(x, y);
    Int total = 0;
    auto xs = curve_components(x), ys = curve_components(y);
    for (const auto& [a, ma] : xs) {
        LiftInfo la = lift_info(S, a);
        for (const auto& [b, mb] : ys) {
            LiftInfo lb = lift_info(S, b);
            Int num = 2 * intersection(a, b) * ma * mb * la.classes * lb.classes;
            total += num / (la.sheets * lb.sheets);
        }
    }
    return total;
}

Int geometric_intersection(const Surface& S, const std::vector<MultiCurve>& xs, const MultiCurve& y) {
    Int t = 0;
    for (const auto& x : xs) t += geometric_intersection(S, x, y);
    return t;
}

bool is_isotopic(const MultiCurve& x, const MultiCurve& y) { return x.T->same_as(*y.T) && x.w == y.w; }

std::optional<Lamination> core_arc(const MultiCurve& c) {
    const auto& s = shorten(c);
    const auto& T = s.short_lam.T;
    for (int i = 0; i < T->zeta(); ++i) {
        if (T->vertex_of(i) == T->vertex_of(~i)) continue;
        Lamination a = edge_arc(T, i);
        if (arc_boundary(a).w == s.short_lam.w) return s.conjugator.inverse()(a);
    }
    return std::nullopt;
}

Encoding twist_encoding(const Surface& S, const MultiCurve& mc, long power) {
    if (power == 0 || mc.empty() || S.model == Model::Degenerate) return Encoding(mc.T);
    if (!S.hyperelliptic()) return encode_twist(mc, power);
    auto comps = curve_components(mc);
    std::vector<LiftInfo> info;
    bool all_two = true;
    for (const auto& [c, m] : comps) {
        info.push_back(lift_info(S, c));
        all_two = all_two && info.back().two_point_side;
    }
    // a full twist downstairs about the boundary of an arc lifts to the square of a twist
    if (all_two && power % 2 == 0) return encode_twist(mc, power / 2);
    Encoding e(mc.T);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const auto& [c, m] = comps[k];
        long p = power * m.get_si();
        if (info[k].two_point_side) {
            auto arc = core_arc(c);
            if (!arc) throw std::runtime_error("could not locate the core arc of a symmetric curve");
            e.then(encode_halftwist(*arc, p));
        } else if (info[k].sheets == 1) {
            e.then(encode_twist(c, 2 * p));
        } else {
            e.then(encode_twist(c, p));
        }
    }
    return e;
}

TracedCurve trace(const MultiCurve& c) {
    TracedCurve t{c.T, {}};
    const auto& T = *c.T;
    for (int ti = 0; ti < T.num_triangles(); ++ti) {
        const auto& tr = T.triangles()[ti];
        for (int i = 0; i < 3; ++i) {
            Label a = tr[i], b = tr[(i + 1) % 3], o = tr[(i + 2) % 3];
            if (sgn(c(a)) < 0 || sgn(c(b)) < 0 || sgn(c(o)) < 0) throw std::invalid_argument("cannot trace a lamination with arc components");
            Int x = (c(a) + c(b) - c(o)) / 2;
            if (sgn(x) > 0) t.bundles.push_back({ti, a, b, x, c(a) - x + 1, 1});
        }
    }
    return t;
}

Weights coordinates(const TracedCurve& t) {
    Weights w(t.T->zeta(), 0);
    for (const auto& b : t.bundles) {
        if (b.from >= 0) w[b.from] += b.weight;
        if (b.to >= 0) w[b.to] += b.weight;
    }
    return w;
}

EfficientConfiguration mutual_efficient_position(const Surface& S, const std::vector<MultiCurve>& cs) {
    EfficientConfiguration out;
    for (const auto& c : cs) out.traces.push_back(trace(c));
    out.crossings.assign(cs.size(), std::vector<Int>(cs.size(), 0));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) out.crossings[i][j] = out.crossings[j][i] = geometric_intersection(S, cs[i], cs[j]);
    return out;
}

AnnulusChart annulus_chart(const Surface& S, const MultiCurve& y, const std::vector<MultiCurve>& X, const MultiCurve& gamma) {
    if (curve_components(y).size() != 1) throw std::invalid_argument("annulus chart needs a connected core curve");
    AnnulusChart ch;
    ch.fibers = geometric_intersection(S, X, y);
    ch.strands = geometric_intersection(S, gamma, y);
    if (sgn(ch.fibers) == 0 || sgn(ch.strands) == 0) return ch;
    // gamma winds k times around the core when untwisting k times removes exactly
    // k * strands * fibers crossings with X
    const int cap = 8;
    Int base = geometric_intersection(S, X, gamma);
    for (int sign : {1, -1}) {
        int k = 0;
        MultiCurve g = gamma;
        Encoding step = twist_encoding(S, y, -sign);
        while (k < cap) {
            g = step(g);
            Int want = base - Int(k + 1) * ch.strands * ch.fibers;
            if (geometric_intersection(S, X, g) != want) break;
            ++k;
        }
        ch.circling = std::max(ch.circling, k);
    }
    return ch;
}

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void join(int a, int b) { p[find(a)] = find(b); }
};

long small(const Int& x) {
    if (!x.fits_slong_p()) throw std::runtime_error("region analysis: weight too large after shortening");
    return x.get_si();
}

} // namespace

RegionMap complement_regions(const std::vector<MultiCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("no curves");
    const auto& sh = shorten(lam_sum(curves));
    const auto& T = *sh.short_lam.T;
    const int z = T.zeta();
    std::vector<long> w(z);
    for (int i = 0; i < z; ++i) {
        w[i] = small(sh.short_lam.w[i]);
        if (w[i] < 0) throw std::invalid_argument("region analysis needs curves, not arcs");
    }
    std::vector<int> seg0(z + 1, 0), pt0(z + 1, 0);
    for (int i = 0; i < z; ++i) {
        seg0[i + 1] = seg0[i] + (int)w[i] + 1;
        pt0[i + 1] = pt0[i] + (int)w[i];
    }
    auto W = [&](Label l) { return w[index_of(l)]; };
    auto seg = [&](Label l, long k) { return l >= 0 ? seg0[l] + (int)k : seg0[~l] + (int)(w[~l] - k); };
    auto pt = [&](Label l, long j) { return l >= 0 ? pt0[l] + (int)j - 1 : pt0[~l] + (int)(w[~l] - j); };
    DSU segs(seg0[z]), pts(std::max(1, pt0[z]));
    std::vector<int> piece_seg;
    for (const auto& t : T.triangles()) {
        long x[3];
        for (int i = 0; i < 3; ++i) x[i] = (W(t[i]) + W(t[(i + 1) % 3]) - W(t[(i + 2) % 3])) / 2; // corner t[i] | t[i+1]
        for (int i = 0; i < 3; ++i) {
            Label a = t[i], b = t[(i + 1) % 3];
            for (long k = 0; k < x[i]; ++k) {
                segs.join(seg(a, W(a) - k), seg(b, k));
                piece_seg.push_back(seg(b, k));
            }
            for (long k = 1; k <= x[i]; ++k) pts.join(pt(a, W(a) - k + 1), pt(b, k));
        }
        segs.join(seg(t[0], x[2]), seg(t[1], x[0]));
        segs.join(seg(t[1], x[0]), seg(t[2], x[1]));
        piece_seg.push_back(seg(t[0], x[2]));
    }
    std::vector<int> rid(seg0[z], -1);
    RegionMap out;
    for (int s = 0; s < seg0[z]; ++s) {
        int r = segs.find(s);
        if (rid[r] < 0) {
            rid[r] = (int)out.regions.size();
            out.regions.emplace_back();
        }
        out.regions[rid[r]].euler -= 1;
    }
    auto region_of = [&](int s) { return rid[segs.find(s)]; };
    for (int s : piece_seg) out.regions[region_of(s)].euler += 1;
    for (int v = 0; v < T.num_vertices(); ++v) {
        Region& R = out.regions[region_of(seg(T.vertices()[v][0], 0))];
        R.euler += 1;
        if (T.tag(v) > 0)
            R.points.push_back(T.tag(v));
        else
            R.unlabelled += 1;
    }
    for (auto& R : out.regions) std::sort(R.points.begin(), R.points.end());

    // match point classes to the input curves
    std::vector<Weights> images;
    for (const auto& c : curves) images.push_back(sh.conjugator(c).w);
    std::vector<int> seen_root(std::max(1, pt0[z]), -1);
    out.sides.assign(curves.size(), {-1, -1});
    std::vector<char> matched(curves.size(), 0);
    for (int i = 0; i < z; ++i) {
        for (long j = 1; j <= w[i]; ++j) {
            int r = pts.find(pt(i, j));
            if (seen_root[r] >= 0) continue;
            seen_root[r] = 1;
            Weights cw(z, 0);
            for (int i2 = 0; i2 < z; ++i2)
                for (long j2 = 1; j2 <= w[i2]; ++j2)
                    if (pts.find(pt(i2, j2)) == r) cw[i2] += 1;
            int idx = -1;
            for (std::size_t c = 0; c < images.size(); ++c)
                if (!matched[c] && images[c] == cw) {
                    idx = (int)c;
                    break;
                }
            if (idx < 0) throw std::invalid_argument("curves are not disjoint, connected and pairwise distinct");
            matched[idx] = 1;
            int r1 = region_of(seg(i, j - 1)), r2 = region_of(seg(i, j));
            out.sides[idx] = {std::min(r1, r2), std::max(r1, r2)};
            out.regions[r1].slots.push_back(idx);
            out.regions[r2].slots.push_back(idx);
        }
    }
    for (char m : matched)
        if (!m) throw std::invalid_argument("curves are not disjoint, connected and pairwise distinct");
    for (auto& R : out.regions) std::sort(R.slots.begin(), R.slots.end());
    return out;
}

} // namespace hds
