#pragma once

#include "hds/bigint.hpp"
#include "hds/triangulation.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hds {

// Normal coordinates on a triangulation. Negative entries mark arcs lying along an edge.
struct Lamination {
    TriPtr T;
    Weights w;

    const Int& operator()(Label l) const { return w[index_of(l)]; }
    bool empty() const;
    bool operator==(const Lamination& o) const { return T.get() == o.T.get() && w == o.w; }
};

class Encoding;

class Move {
public:
    Move(TriPtr s, TriPtr t) : src(std::move(s)), dst(std::move(t)) {}
    virtual ~Move() = default;
    virtual Weights apply(const Weights& w) const = 0;
    virtual std::shared_ptr<const Move> inverse() const = 0;
    TriPtr src, dst;
};
using MovePtr = std::shared_ptr<const Move>;

// A sequence of moves; moves()[0] is applied first.
class Encoding {
public:
    explicit Encoding(TriPtr T) : src_(T), dst_(T) {}
    Encoding(TriPtr s, TriPtr t, std::vector<MovePtr> moves) : src_(std::move(s)), dst_(std::move(t)), moves_(std::move(moves)) {}

    const TriPtr& source() const { return src_; }
    const TriPtr& target() const { return dst_; }
    const std::vector<MovePtr>& moves() const { return moves_; }
    std::size_t size() const { return moves_.size(); }

    Weights apply(Weights w) const;
    Lamination operator()(const Lamination& l) const;
    // this after other.
    Encoding after(const Encoding& other) const;
    void then(const MovePtr& m);
    void then(const Encoding& e);
    Encoding inverse() const;
    // h^-1 * this * h
    Encoding conjugate_by(const Encoding& h) const;

private:
    TriPtr src_, dst_;
    std::vector<MovePtr> moves_;
};

class EdgeFlip : public Move {
public:
    EdgeFlip(TriPtr s, TriPtr t, Label e);
    Weights apply(const Weights& w) const override;
    MovePtr inverse() const override;
    Label edge;
    std::array<Label, 5> sq;
};

class Isometry : public Move {
public:
    Isometry(TriPtr s, TriPtr t, std::vector<Label> label_map);
    Weights apply(const Weights& w) const override;
    MovePtr inverse() const override;
    std::vector<Label> map; // indexed by label + zeta
};

// Twist about a short curve; large powers are accelerated through the slope.
class Twist : public Move {
public:
    Twist(const Lamination& short_curve, long power);
    Twist(const Lamination& c, long power, std::shared_ptr<const Encoding> base) : Move(c.T, c.T), curve(c), power(power), base(std::move(base)) {}
    Weights apply(const Weights& w) const override;
    MovePtr inverse() const override;
    Lamination curve;
    long power;
    std::shared_ptr<const Encoding> base;
};

class HalfTwist : public Move {
public:
    HalfTwist(const Lamination& short_arc, long power);
    HalfTwist(const Lamination& a, long power, std::shared_ptr<const Encoding> base) : Move(a.T, a.T), arc(a), power(power), base(std::move(base)) {}
    Weights apply(const Weights& w) const override;
    MovePtr inverse() const override;
    Lamination arc;
    long power;
    std::shared_ptr<const Encoding> base;
};

Encoding flip_encoding(const TriPtr& T, Label e);

// --- normal coordinate utilities ---
Int weight(const Lamination& L);
Int dual_weight2(const Lamination& L, Label e);
Int dual_weight(const Lamination& L, Label e);
inline Int left_weight(const Lamination& L, Label e) { return dual_weight(L, L.T->corner(e)[1]); }
inline Int right_weight(const Lamination& L, Label e) { return dual_weight(L, L.T->corner(e)[2]); }
bool is_admissible(const TriPtr& T, const Weights& w);

Lamination from_cut_sequence(const TriPtr& T, const std::vector<Label>& seq);
Lamination edge_curve(const TriPtr& T, Label e);
Lamination edge_arc(const TriPtr& T, Label e);
std::vector<Label> cyclic_slice(const std::vector<Label>& L, Label x, std::optional<Label> y = std::nullopt);

struct Component {
    Lamination lam;
    Int mult;
    Label edge = 0; // parallel edge, or first edge of the vertex cycle for peripheral ones
    bool is_arc = false;
    bool peripheral = false;
};

std::vector<Component> peripheral_components(const Lamination& L);
std::vector<Component> parallel_components(const Lamination& L);
Lamination peripheral_part(const Lamination& L);
bool is_peripheral(const Lamination& L);

struct Shortened {
    Lamination short_lam;
    Encoding conjugator; // short_lam = conjugator(original)
};
const Shortened& shorten(const Lamination& L);
void clear_shorten_cache();

std::vector<Component> components(const Lamination& L);
Int intersection(const Lamination& a, const Lamination& b);

struct Slope {
    Int num, den;
};
std::optional<Slope> slope(const Lamination& curve, const Lamination& L);
std::optional<Lamination> trace_curve(const Lamination& L, Label edge, Int intersection, int max_length);

Encoding encode_twist(const Lamination& multicurve, long power);
Encoding encode_halftwist(const Lamination& arc, long power);
bool has_distinct_endpoints(const Lamination& arc);
Lamination arc_boundary(const Lamination& multiarc);

} // namespace hds
