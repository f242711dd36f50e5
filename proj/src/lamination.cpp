#include "hds/engine.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace hds {

Int weight(const Lamination& L) {
    Int s = 0;
    for (const auto& x : L.w)
        if (sgn(x) > 0) s += x;
    return s;
}

Int dual_weight2(const Lamination& L, Label e) {
    const auto& c = L.T->corner(e);
    Int a = max0(L(c[0])), b = max0(L(c[1])), cc = max0(L(c[2]));
    Int corr = 0;
    Int t1 = a + b - cc, t2 = b + cc - a, t3 = cc + a - b;
    if (t1 < corr) corr = t1;
    if (t2 < corr) corr = t2;
    if (t3 < corr) corr = t3;
    return b + cc - a + corr;
}

Int dual_weight(const Lamination& L, Label e) {
    Int d = dual_weight2(L, e);
    if (!mpz_even_p(d.get_mpz_t())) throw std::runtime_error("weights are not consistent around a triangle");
    return d / 2;
}

bool is_admissible(const TriPtr& T, const Weights& w) {
    if ((int)w.size() != T->zeta()) return false;
    for (const auto& x : w)
        if (sgn(x) < 0) return false;
    for (const auto& t : T->triangles()) {
        const Int &a = w[index_of(t[0])], &b = w[index_of(t[1])], &c = w[index_of(t[2])];
        Int s = a + b + c;
        if (!mpz_even_p(s.get_mpz_t())) return false;
        if (a > b + c || b > a + c || c > a + b) return false;
    }
    return true;
}

std::vector<Label> cyclic_slice(const std::vector<Label>& L, Label x, std::optional<Label> y) {
    auto it = std::find(L.begin(), L.end(), x);
    if (it == L.end()) throw std::logic_error("cyclic_slice: missing start");
    std::vector<Label> r(it, L.end());
    r.insert(r.end(), L.begin(), it);
    if (y) {
        auto j = std::find(r.begin(), r.end(), *y);
        r.erase(j, r.end());
    }
    return r;
}

Lamination from_cut_sequence(const TriPtr& T, const std::vector<Label>& seq) {
    Weights w(T->zeta(), 0);
    for (Label l : seq) w[index_of(l)] += 1;
    return {T, w};
}

Lamination edge_curve(const TriPtr& T, Label e) {
    std::vector<Label> edges;
    const auto& ve = T->vertex_cycle(e);
    const auto& vn = T->vertex_cycle(~e);
    auto mid = [](std::vector<Label> v) { // [2:-1]
        if (v.size() <= 3) return std::vector<Label>{};
        return std::vector<Label>(v.begin() + 2, v.end() - 1);
    };
    if (T->vertex_of(e) == T->vertex_of(~e)) {
        auto s = cyclic_slice(ve, e, ~e);
        edges.assign(s.begin() + 1, s.end());
    } else if (ve.size() == 1) {
        edges = mid(cyclic_slice(vn, ~e));
    } else if (vn.size() == 1) {
        edges = mid(cyclic_slice(ve, e));
    } else {
        for (Label l : ve)
            if (l != e && l != ~e) edges.push_back(l);
        for (Label l : vn)
            if (l != e && l != ~e) edges.push_back(l);
    }
    return from_cut_sequence(T, edges);
}

Lamination edge_arc(const TriPtr& T, Label e) {
    Weights w(T->zeta(), 0);
    w[index_of(e)] = -1;
    return {T, w};
}

namespace {

Int maximin0(const std::vector<Int>& xs) {
    if (xs.empty()) throw std::logic_error("maximin of an empty sequence");
    Int m = *std::min_element(xs.begin(), xs.end());
    return sgn(m) > 0 ? m : Int(0);
}

void add_scaled(Weights& a, const Weights& b, const Int& k) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
}

void push_unique(std::vector<Component>& out, Component c) {
    for (auto& o : out) {
        if (o.lam.w == c.lam.w) {
            o.mult = c.mult;
            o.edge = c.edge;
            return;
        }
    }
    out.push_back(std::move(c));
}

} // namespace

std::vector<Component> peripheral_components(const Lamination& L) {
    std::vector<Component> out;
    for (const auto& v : L.T->vertices()) {
        std::vector<Int> lw;
        for (Label l : v) lw.push_back(left_weight(L, l));
        Int m = maximin0(lw);
        if (sgn(m) > 0) push_unique(out, {from_cut_sequence(L.T, v), m, v[0], false, true});
    }
    return out;
}

Lamination peripheral_part(const Lamination& L) {
    Weights w(L.w.size(), 0);
    for (const auto& c : peripheral_components(L)) add_scaled(w, c.lam.w, c.mult);
    return {L.T, w};
}

bool is_peripheral(const Lamination& L) { return peripheral_part(L).w == L.w; }

std::vector<Component> parallel_components(const Lamination& L) {
    std::vector<Component> out;
    const auto& T = L.T;
    for (Label e = -T->zeta(); e < T->zeta(); ++e) {
        if (e >= 0) {
            Int m = -L(e);
            if (sgn(m) > 0) push_unique(out, {edge_arc(T, e), m, e, true, false});
        }
        if (T->vertex_of(e) == T->vertex_of(~e)) {
            auto ve = cyclic_slice(T->vertex_cycle(e), e, ~e);
            if (ve.size() > 2) {
                std::vector<Int> lw;
                for (Label x : ve) lw.push_back(left_weight(L, x));
                Int around = maximin0(lw);
                std::vector<Int> tw;
                for (std::size_t i = 1; i + 1 < ve.size(); ++i) tw.push_back(lw[i] - around);
                Int twisting = maximin0(tw);
                if (lw.front() == around && lw.back() == around && sgn(twisting) > 0)
                    push_unique(out, {edge_curve(T, e), twisting, e, false, false});
            }
        }
    }
    return out;
}

std::optional<Lamination> trace_curve(const Lamination& L, Label edge, Int inter, int max_length) {
    Int tilde_upper = L(edge) + 1;
    Int tilde_inter = L(edge) - inter;
    Int tilde_lower = -1;
    Label start = edge;
    if (sgn(inter) < 0 || inter >= L(edge)) return std::nullopt;
    std::vector<Label> trace{edge};
    const auto& T = L.T;
    for (int step = 0; step < max_length; ++step) {
        const auto& c = T->corner(~edge);
        Label x = c[0], y = c[1], z = c[2];
        Int dz = dual_weight(L, z), dx = dual_weight(L, x);
        if (inter < dz) {
            edge = y;
        } else if (sgn(dx) < 0 && dz <= inter && inter < dz - dx) {
            return std::nullopt;
        } else {
            inter = L(z) - L(x) + inter;
            edge = z;
        }
        if (edge == start) {
            Int ret = L(edge) - inter;
            if (tilde_lower < ret && ret < tilde_upper) return from_cut_sequence(T, trace);
            return std::nullopt;
        }
        if (edge == ~start) {
            if (inter < tilde_inter)
                tilde_lower = std::max(tilde_lower, inter);
            else if (inter > tilde_inter)
                tilde_upper = std::min(tilde_upper, inter);
        }
        trace.push_back(edge);
        if (sgn(inter) < 0 || inter >= L(edge)) return std::nullopt;
    }
    return std::nullopt;
}

namespace {

struct Key {
    const Triangulation* T;
    Weights w;
    bool operator==(const Key& o) const { return T == o.T && w == o.w; }
};
struct KeyHash {
    std::size_t operator()(const Key& k) const { return WeightsHash{}(k.w) ^ (std::hash<const void*>{}(k.T) << 1); }
};

std::mutex cache_mu;
std::unordered_map<Key, std::shared_ptr<Shortened>, KeyHash> cache;
std::list<Key> cache_order;
const std::size_t cache_cap = 4096;

int strategy(const Lamination& L, Label e) {
    if (!L.T->is_flippable(e)) return 0;
    auto sq = L.T->square(e);
    Int ad = dual_weight(L, sq[0]), bd = dual_weight(L, sq[1]), ed = dual_weight(L, sq[4]);
    if (sgn(ed) < 0) return 2;
    if (sgn(ed) == 0 && sgn(ad) > 0 && sgn(bd) > 0) return 1;
    return 0;
}

std::shared_ptr<Shortened> shorten_impl(const Lamination& L) {
    const int zeta = L.T->zeta();
    Lamination periph = peripheral_part(L);
    Lamination lam{L.T, L.w};
    for (std::size_t i = 0; i < lam.w.size(); ++i) lam.w[i] -= periph.w[i];
    Encoding conj(L.T);
    std::vector<std::pair<Label, Int>> arc_comps, curve_comps;
    auto record = [](std::vector<std::pair<Label, Int>>& v, Label e, const Int& m) {
        for (auto& p : v)
            if (p.first == e) {
                p.second = m;
                return;
            }
        v.push_back({e, m});
    };
    bool has_arcs = true;
    auto step = [&](const Encoding& mv) {
        conj.then(mv);
        lam = mv(lam);
        periph = mv(periph);
    };
    while (true) {
        Weights g = lam.w;
        for (const auto& c : parallel_components(lam)) {
            if (sgn(lam(c.edge)) <= 0) {
                add_scaled(g, c.lam.w, -c.mult);
                record(c.is_arc ? arc_comps : curve_comps, c.edge, c.mult);
            }
        }
        lam.w = g;
        if (lam.empty()) break;
        if (has_arcs) {
            bool any = false;
            for (Label e = -zeta; e < zeta && !any; ++e)
                if (sgn(lam(e)) < 0 || sgn(dual_weight(lam, e)) < 0) any = true;
            has_arcs = any;
        }
        int turn_left = 0, turn_right = 0;
        std::vector<Label> extra;
        const int ub = has_arcs ? 2 : 1;
        while (true) {
            Label best = 0;
            int bestk = -1;
            std::vector<Label> cand = extra;
            for (Label e = -zeta; e < zeta; ++e) cand.push_back(e);
            for (Label e : cand) {
                int k = strategy(lam, e);
                if (k > bestk) {
                    bestk = k;
                    best = e;
                }
                if (k >= ub) break;
            }
            if (bestk <= 0) break;
            Label edge = best;
            if (!extra.empty()) {
                if (edge == extra[0]) {
                    ++turn_left;
                    turn_right = 0;
                } else if (edge == extra[1]) {
                    turn_left = 0;
                    ++turn_right;
                } else {
                    turn_left = turn_right = 0;
                }
            }
            auto sq = lam.T->square(edge);
            Encoding mv = flip_encoding(lam.T, edge);
            Int w0 = weight(lam);
            bool considered = false;
            if (std::max(turn_left, turn_right) > 2 * zeta && w0 > 4 * zeta) {
                Int w1 = weight(mv(lam));
                if (9 * w0 < 10 * w1) considered = true;
            }
            if (considered) {
                bool failed = false;
                auto curve = trace_curve(lam, edge, left_weight(lam, edge), 2 * zeta);
                if (!curve) {
                    failed = true;
                } else {
                    auto s = slope(*curve, lam);
                    if (!s) {
                        failed = true;
                    } else if (abs(s->num) > 2 * s->den) {
                        Int q = abs(s->num) / s->den;
                        long tr = q.get_si();
                        if (sgn(s->num) < 0) tr = -tr;
                        mv = encode_twist(*curve, -tr);
                        turn_left = turn_right = 0;
                    }
                }
                if (failed) extra = {sq[2], sq[3]};
            } else {
                extra = {sq[2], sq[3]};
            }
            step(mv);
        }
        // walk around the vertices to find the multiarc that still needs shortening
        std::vector<Label> sequence;
        std::set<Label> used;
        const auto& T = lam.T;
        for (Label s0 = -zeta; s0 < zeta; ++s0) {
            if (used.count(s0) || sgn(left_weight(lam, s0)) <= 0 || sgn(right_weight(lam, s0)) > 0) continue;
            Label e = s0;
            bool add = false;
            while (true) {
                used.insert(e);
                if (add) sequence.push_back(e);
                e = T->corner(~e)[sgn(left_weight(lam, ~e)) > 0 ? 2 : 1];
                add = add || sgn(right_weight(lam, e)) <= 0;
                if (e == s0) break;
            }
        }
        if (!sequence.empty()) {
            Lamination multiarc = from_cut_sequence(T, sequence);
            auto sub = shorten(multiarc).conjugator;
            step(sub);
        }
    }
    const auto& T = lam.T;
    Weights out = periph.w;
    for (auto& [e, m] : arc_comps) add_scaled(out, edge_arc(T, e).w, m);
    for (auto& [e, m] : curve_comps) add_scaled(out, edge_curve(T, e).w, m);
    return std::make_shared<Shortened>(Shortened{{T, out}, std::move(conj)});
}

} // namespace

const Shortened& shorten(const Lamination& L) {
    Key k{L.T.get(), L.w};
    {
        std::lock_guard<std::mutex> g(cache_mu);
        auto it = cache.find(k);
        if (it != cache.end()) return *it->second;
    }
    auto r = shorten_impl(L);
    std::lock_guard<std::mutex> g(cache_mu);
    auto [it, fresh] = cache.emplace(k, r);
    if (fresh) {
        cache_order.push_back(k);
        if (cache_order.size() > cache_cap) {
            cache.erase(cache_order.front());
            cache_order.pop_front();
        }
    }
    return *it->second;
}

void clear_shorten_cache() {
    std::lock_guard<std::mutex> g(cache_mu);
    cache.clear();
    cache_order.clear();
}

std::vector<Component> components(const Lamination& L) {
    const auto& s = shorten(L);
    Encoding inv = s.conjugator.inverse();
    std::vector<Component> out;
    for (auto c : peripheral_components(s.short_lam)) {
        c.lam = inv(c.lam);
        push_unique(out, c);
    }
    for (auto c : parallel_components(s.short_lam)) {
        c.lam = inv(c.lam);
        push_unique(out, c);
    }
    return out;
}

Int intersection(const Lamination& a, const Lamination& b) {
    const auto& s = shorten(a);
    Lamination sb = s.conjugator(b);
    const auto& sh = s.short_lam;
    const auto& T = sh.T;
    Int total = 0;
    for (const auto& c : peripheral_components(sh)) {
        Int t = 0;
        for (Label l : T->vertices()[T->vertex_of(c.edge)]) t += max0(-sb(l)) + max0(-left_weight(sb, l));
        total += c.mult * t;
    }
    for (const auto& c : parallel_components(sh)) {
        if (c.is_arc) {
            total += c.mult * max0(sb(c.edge));
        } else {
            auto ve = cyclic_slice(T->vertex_cycle(c.edge), c.edge, ~c.edge);
            std::vector<Int> lw2;
            for (Label x : ve) lw2.push_back(dual_weight2(sb, T->corner(x)[1]));
            Int around2 = maximin0(lw2);
            Int out = 0;
            for (std::size_t i = 0; i < ve.size(); ++i) {
                out += max0(-left_weight(sb, ve[i]));
                if (i >= 1) out += max0(-sb(ve[i]));
            }
            total += c.mult * (max0(sb(c.edge)) - around2 + out);
        }
    }
    return total;
}

std::optional<Slope> slope(const Lamination& curve, const Lamination& L) {
    if (is_peripheral(curve)) return std::nullopt;
    const auto& s = shorten(curve);
    Lamination sl = s.conjugator(L);
    auto comps = parallel_components(s.short_lam);
    if (comps.size() != 1) return std::nullopt;
    Label a = comps[0].edge;
    const auto& T = s.short_lam.T;
    auto ve = cyclic_slice(T->vertex_cycle(a), a, ~a);
    std::vector<Int> lw;
    for (Label x : ve) lw.push_back(left_weight(sl, x));
    Int around = maximin0(lw);
    Int out = 0;
    for (std::size_t i = 0; i < ve.size(); ++i) {
        out += max0(-lw[i]);
        if (i >= 1) out += max0(-sl(ve[i]));
    }
    Int den = max0(sl(a)) - 2 * around + out;
    if (sgn(den) == 0) return std::nullopt;
    std::vector<Int> tw;
    for (std::size_t i = 1; i + 1 < ve.size(); ++i) tw.push_back(lw[i] - around);
    Int twisting = maximin0(tw);
    int sign = (left_weight(sl, a) - around > 0 || sgn(right_weight(sl, a)) < 0) ? -1 : 1;
    return Slope{sign * twisting, den};
}

Encoding encode_twist(const Lamination& mc, long power) {
    if (power == 0 || is_peripheral(mc)) return Encoding(mc.T);
    const auto& s = shorten(mc);
    const auto& sh = s.short_lam;
    Encoding h(sh.T);
    for (const auto& c : parallel_components(sh)) {
        if (c.is_arc) throw std::invalid_argument("twisting requires a multicurve");
        long p = power * c.mult.get_si();
        h.then(std::make_shared<Twist>(c.lam, p));
    }
    return h.conjugate_by(s.conjugator);
}

bool has_distinct_endpoints(const Lamination& arc) {
    std::set<int> verts;
    for (const auto& v : arc.T->vertices())
        for (Label l : v)
            if (sgn(arc(l)) < 0 || sgn(left_weight(arc, l)) < 0) {
                verts.insert(arc.T->vertex_of(l));
                break;
            }
    Int n = 0;
    for (const auto& c : components(arc)) n += c.mult;
    return Int((long)verts.size()) == 2 * n;
}

Encoding encode_halftwist(const Lamination& arc, long power) {
    if (!has_distinct_endpoints(arc)) throw std::invalid_argument("arc connects a vertex to itself");
    if (power == 0) return Encoding(arc.T);
    const auto& s = shorten(arc);
    Encoding h(s.short_lam.T);
    for (const auto& c : parallel_components(s.short_lam)) h.then(std::make_shared<HalfTwist>(c.lam, power));
    return h.conjugate_by(s.conjugator);
}

Lamination arc_boundary(const Lamination& multiarc) {
    const auto& s = shorten(multiarc);
    const auto& sh = s.short_lam;
    const auto& T = sh.T;
    int z = T->zeta();
    std::vector<char> used(2 * z, 0);
    auto U = [&](Label l) -> char& { return used[l + z]; };
    for (Label e = -z; e < z; ++e)
        if (sgn(sh(e)) < 0) U(e) = 1;
    auto count_used = [&](int ti) {
        int n = 0;
        for (Label l : T->triangles()[ti]) n += U(l);
        return n;
    };
    std::vector<int> todo;
    for (int ti = 0; ti < T->num_triangles(); ++ti)
        if (count_used(ti) == 2) todo.push_back(ti);
    while (!todo.empty()) {
        int ti = todo.back();
        todo.pop_back();
        for (Label l : T->triangles()[ti]) {
            if (!U(l)) {
                U(l) = 1;
                U(~l) = 1;
                int nb = T->triangle_of(~l);
                if (count_used(nb) == 2) todo.push_back(nb);
                break;
            }
        }
    }
    std::vector<char> passed(2 * z, 0);
    Weights g(z, 0);
    for (Label e0 = -z; e0 < z; ++e0) {
        Label e = e0;
        if (passed[e + z] || U(e) || !U(T->corner(e)[2])) continue;
        while (!passed[e + z]) {
            g[index_of(e)] += 1;
            passed[e + z] = 1;
            const auto& c = T->corner(e);
            e = !U(~c[2]) ? ~c[2] : ~c[1];
        }
    }
    return s.conjugator.inverse()(Lamination{T, g});
}

} // namespace hds
