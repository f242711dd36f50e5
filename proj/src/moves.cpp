#include "hds/engine.hpp"

#include <map>
#include <stdexcept>

namespace hds {

bool Lamination::empty() const {
    for (const auto& x : w)
        if (sgn(x) != 0) return false;
    return true;
}

Weights Encoding::apply(Weights w) const {
    for (const auto& m : moves_) w = m->apply(w);
    return w;
}

Lamination Encoding::operator()(const Lamination& l) const {
    if (l.T.get() != src_.get() && !l.T->same_as(*src_)) throw std::logic_error("encoding applied on the wrong triangulation");
    return {dst_, apply(l.w)};
}

Encoding Encoding::after(const Encoding& other) const {
    Encoding out = other;
    out.then(*this);
    return out;
}

void Encoding::then(const MovePtr& m) {
    moves_.push_back(m);
    dst_ = m->dst;
}

void Encoding::then(const Encoding& e) {
    moves_.insert(moves_.end(), e.moves_.begin(), e.moves_.end());
    dst_ = e.dst_;
}

Encoding Encoding::inverse() const {
    std::vector<MovePtr> inv;
    inv.reserve(moves_.size());
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) inv.push_back((*it)->inverse());
    return Encoding(dst_, src_, std::move(inv));
}

Encoding Encoding::conjugate_by(const Encoding& h) const {
    Encoding out = h;
    out.then(*this);
    out.then(h.inverse());
    return out;
}

EdgeFlip::EdgeFlip(TriPtr s, TriPtr t, Label e) : Move(std::move(s), std::move(t)), edge(e), sq(src->square(e)) {}

Weights EdgeFlip::apply(const Weights& g) const {
    const Int& ei = g[index_of(edge)];
    Int a = max0(g[index_of(sq[0])]), b = max0(g[index_of(sq[1])]), c = max0(g[index_of(sq[2])]), d = max0(g[index_of(sq[3])]);
    Weights out = g;
    Int& r = out[index_of(edge)];
    if (ei >= a + b && a >= d && b >= c)
        r = a + b - ei;
    else if (ei >= c + d && d >= a && c >= b)
        r = c + d - ei;
    else if (sgn(ei) <= 0 && a >= b && d >= c)
        r = a + d - ei;
    else if (sgn(ei) <= 0 && b >= a && c >= d)
        r = b + c - ei;
    else if (sgn(ei) >= 0 && a >= b + ei && d >= c + ei)
        r = a + d - 2 * ei;
    else if (sgn(ei) >= 0 && b >= a + ei && c >= d + ei)
        r = b + c - 2 * ei;
    else if (a + b >= ei && b + ei >= 2 * c + a && a + ei >= 2 * d + b) {
        Int t = a + b - ei;
        if (!mpz_even_p(t.get_mpz_t())) throw std::runtime_error("inconsistent weights in flip");
        r = t / 2;
    } else if (c + d >= ei && d + ei >= 2 * a + c && c + ei >= 2 * b + d) {
        Int t = c + d - ei;
        if (!mpz_even_p(t.get_mpz_t())) throw std::runtime_error("inconsistent weights in flip");
        r = t / 2;
    } else {
        Int x = a + c, y = b + d;
        r = (x > y ? x : y) - ei;
    }
    return out;
}

MovePtr EdgeFlip::inverse() const { return std::make_shared<EdgeFlip>(dst, src, ~edge); }

Isometry::Isometry(TriPtr s, TriPtr t, std::vector<Label> label_map) : Move(std::move(s), std::move(t)), map(std::move(label_map)) {}

Weights Isometry::apply(const Weights& g) const {
    int z = src->zeta();
    Weights out(g.size());
    for (int i = 0; i < z; ++i) out[index_of(map[i + z])] = g[i];
    return out;
}

MovePtr Isometry::inverse() const {
    int z = src->zeta();
    std::vector<Label> inv(2 * z);
    for (Label l = -z; l < z; ++l) inv[map[l + z] + z] = l;
    return std::make_shared<Isometry>(dst, src, std::move(inv));
}

Encoding flip_encoding(const TriPtr& T, Label e) {
    auto T2 = T->flip(e);
    return Encoding(T, T2, {std::make_shared<EdgeFlip>(T, T2, e)});
}

namespace {

Label parallel_edge(const Lamination& L, bool want_arc) {
    auto comps = parallel_components(L);
    if (comps.size() != 1 || comps[0].mult != 1 || comps[0].is_arc != want_arc || comps[0].lam.w != L.w)
        throw std::logic_error("lamination is not a short connected component");
    return comps[0].edge;
}

} // namespace

Twist::Twist(const Lamination& c, long p) : Move(c.T, c.T), curve(c), power(p) {
    if (p == 0) throw std::invalid_argument("zero twist power");
    Label a = parallel_edge(c, false);
    Int nf = weight(c) - dual_weight(c, a);
    Encoding enc(c.T);
    TriPtr cur = c.T;
    for (Int k = 0; k < nf; ++k) {
        auto f = flip_encoding(cur, cur->corner(a)[2]);
        enc.then(f);
        cur = f.target();
    }
    auto iso = find_isometry(*cur, *c.T, {{a, a}});
    enc.then(std::make_shared<Isometry>(cur, c.T, std::move(iso)));
    base = std::make_shared<const Encoding>(std::move(enc));
}

Weights Twist::apply(const Weights& w) const {
    if (power == 1) return base->apply(w);
    if (power == -1) return base->inverse().apply(w);
    Lamination L{curve.T, w};
    Int inter = intersection(curve, L);
    if (sgn(inter) == 0) return w;
    auto s = slope(curve, L);
    if (!s) throw std::logic_error("slope undefined for an intersecting curve");
    int ssign = sgn(s->num) > 0 ? 1 : -1;
    Int absnum = abs(s->num);
    Int fl = absnum / s->den;
    Int p = power;
    Int ap = abs(p);
    Int steps = ap < fl ? ap : fl;
    Weights g = w;
    if ((power > 0 ? 1 : -1) * ssign < 0) {
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= steps * inter * curve.w[i];
        p += ssign * steps;
    }
    int psign = power > 0 ? 1 : -1;
    Encoding inv = base->inverse();
    for (int k = 0; k < 3; ++k) {
        if (sgn(p) != 0) {
            g = psign > 0 ? base->apply(g) : inv.apply(g);
            p -= psign;
        }
    }
    if (sgn(p) != 0) {
        Int q = abs(p);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += q * inter * curve.w[i];
    }
    return g;
}

MovePtr Twist::inverse() const { return std::make_shared<Twist>(curve, -power, base); }

HalfTwist::HalfTwist(const Lamination& a, long p) : Move(a.T, a.T), arc(a), power(p) {
    if (p == 0) throw std::invalid_argument("zero half twist power");
    Label edge = parallel_edge(a, true);
    const TriPtr& T = a.T;
    if (T->vertex_cycle(edge).size() > T->vertex_cycle(~edge).size()) edge = ~edge;
    Encoding conj(T);
    TriPtr cur = T;
    while (cur->vertex_cycle(edge).size() > 1) {
        auto f = flip_encoding(cur, cur->corner(edge)[2]);
        conj.then(f);
        cur = f.target();
    }
    Encoding half(cur);
    TriPtr cur2 = cur;
    while (cur2->vertex_cycle(~edge).size() > 1) {
        auto f = flip_encoding(cur2, cur2->corner(~edge)[2]);
        half.then(f);
        cur2 = f.target();
    }
    auto iso = find_isometry(*cur2, *cur, {{edge, ~edge}});
    half.then(std::make_shared<Isometry>(cur2, cur, std::move(iso)));
    base = std::make_shared<const Encoding>(half.conjugate_by(conj));
}

Weights HalfTwist::apply(const Weights& w) const {
    if (power == 1) return base->apply(w);
    if (power == -1) return base->inverse().apply(w);
    // even powers are twists about the boundary of the arc
    long k = power >= 0 ? power / 2 : -((-power + 1) / 2);
    Weights g = w;
    if (power - 2 * k == 1) g = base->apply(g);
    return encode_twist(arc_boundary(arc), k).apply(g);
}

MovePtr HalfTwist::inverse() const { return std::make_shared<HalfTwist>(arc, -power, base); }

} // namespace hds
