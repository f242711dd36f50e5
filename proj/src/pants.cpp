#include "hds/pants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hds {

const char* piece_kind_name(PieceKind k) {
    switch (k) {
    case PieceKind::Pants: return "pants";
    case PieceKind::TwoMarkedDisk: return "two_marked_disk";
    case PieceKind::Other: return "other";
    }
    return "?";
}

int expected_curve_count(const MarkedSurface& ms) { return 3 * ms.genus - 3 + ms.marked; }

namespace {

PieceKind kind_of(int euler, std::size_t slots, std::size_t points) {
    if (euler == -1 && slots == 3 && points == 0) return PieceKind::Pants;
    if (euler == 1 && slots == 1 && points == 2) return PieceKind::TwoMarkedDisk;
    return PieceKind::Other;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
};

void lift_census(const Surface& S, const std::vector<MultiCurve>& curves, const RegionMap& rm, Census& out) {
    std::vector<int> sheets, first(curves.size() + 1, 0);
    for (std::size_t c = 0; c < curves.size(); ++c) {
        sheets.push_back(lift_info(S, curves[c]).sheets);
        first[c + 1] = first[c] + sheets.back();
    }
    DSU circ(first.back());
    struct Cover {
        int euler;
        std::vector<int> circles;
    };
    std::vector<Cover> covers;
    for (const auto& R : rm.regions) {
        int p = (int)R.points.size();
        bool odd = false;
        for (int c : R.slots) odd = odd || sheets[c] == 1;
        if (p > 0 || odd) {
            Cover cv{2 * R.euler - p, {}};
            for (int c : R.slots)
                for (int s = 0; s < sheets[c]; ++s) cv.circles.push_back(first[c] + s);
            covers.push_back(cv);
        } else {
            for (int s = 0; s < 2; ++s) {
                Cover cv{R.euler, {}};
                for (int c : R.slots) cv.circles.push_back(first[c] + s);
                covers.push_back(cv);
            }
        }
    }
    for (const auto& cv : covers)
        if (cv.euler == 0 && cv.circles.size() == 2) circ.p[circ.find(cv.circles[0])] = circ.find(cv.circles[1]);
    std::vector<int> cls(first.back(), -1);
    for (std::size_t c = 0; c < curves.size(); ++c) {
        std::vector<int> mine;
        for (int s = 0; s < sheets[c]; ++s) {
            int r = circ.find(first[c] + s);
            if (cls[r] < 0) {
                cls[r] = (int)out.classes.size();
                out.classes.push_back({(int)c, 1});
                mine.push_back(cls[r]);
            }
        }
        for (int k : mine) out.classes[k].share = (int)mine.size();
    }
    for (const auto& cv : covers) {
        if (cv.euler == 0 && cv.circles.size() == 2) continue;
        Piece pc;
        pc.euler = cv.euler;
        for (int x : cv.circles) pc.slots.push_back(cls[circ.find(x)]);
        std::sort(pc.slots.begin(), pc.slots.end());
        pc.kind = kind_of(pc.euler, pc.slots.size(), 0);
        out.pieces.push_back(pc);
    }
}

} // namespace

Census piece_census(const Surface& S, const std::vector<MultiCurve>& curves) {
    Census out;
    if (S.model == Model::Degenerate) {
        out.problem = "surface has no essential curves";
        return out;
    }
    if (curves.empty()) {
        out.problem = "no curves";
    } else {
        RegionMap rm;
        try {
            rm = complement_regions(curves);
        } catch (const std::invalid_argument& e) {
            out.problem = e.what();
            return out;
        }
        if (S.hyperelliptic()) {
            lift_census(S, curves, rm, out);
        } else {
            for (std::size_t c = 0; c < curves.size(); ++c) out.classes.push_back({(int)c, 1});
            for (const auto& R : rm.regions) {
                Piece pc{kind_of(R.euler, R.slots.size(), R.points.size()), R.slots, R.points, R.euler};
                out.pieces.push_back(pc);
            }
        }
    }
    for (const auto& p : out.pieces) {
        if (p.kind == PieceKind::Pants) ++out.pants;
        if (p.kind == PieceKind::TwoMarkedDisk) ++out.disks;
    }
    const int g = S.genus(), b = S.bridges();
    if (!out.problem.empty()) return out;
    for (const auto& p : out.pieces)
        if (p.kind == PieceKind::Other) {
            out.problem = "complementary piece is neither pants nor a 2-marked disk";
            return out;
        }
    if ((int)out.classes.size() != expected_curve_count(S.ms))
        out.problem = "curve count " + std::to_string(out.classes.size()) + " != " + std::to_string(expected_curve_count(S.ms));
    else if (out.pants != 2 * g - 2 + b || out.disks != b)
        out.problem = "piece census: " + std::to_string(out.pants) + " pants, " + std::to_string(out.disks) + " 2-marked disks";
    out.valid = out.problem.empty();
    return out;
}

PantsDecomposition make_decomposition(const Surface& S, std::vector<MultiCurve> curves, std::vector<std::string> names) {
    Census c = piece_census(S, curves);
    if (!c.valid) throw std::runtime_error("not a pants decomposition: " + c.problem);
    return {std::move(curves), std::move(names), std::move(c.classes), std::move(c.pieces)};
}

PantsDecomposition transport(const PantsDecomposition& P, std::vector<MultiCurve> images) {
    if (images.size() != P.curves.size()) throw std::invalid_argument("transport: curve count mismatch");
    PantsDecomposition Q = P;
    Q.curves = std::move(images);
    return Q;
}

void check_surface_hypotheses(const Surface& S) {
    const int g = S.genus(), b = S.bridges();
    if (g == 0 && b < 3) throw std::invalid_argument("a sphere needs at least six marked points (b >= 3)");
    if (g == 1 && b < 1) throw std::invalid_argument("a torus needs at least two marked points (b >= 1)");
}

namespace {

NamedCurves dedupe(NamedCurves in) {
    NamedCurves out;
    for (std::size_t i = 0; i < in.curves.size(); ++i) {
        const auto& c = in.curves[i];
        if (c.empty() || is_peripheral(c)) continue;
        bool dup = false;
        for (const auto& o : out.curves) dup = dup || o.w == c.w;
        if (dup) continue;
        out.curves.push_back(c);
        out.names.push_back(in.names[i]);
    }
    return out;
}

std::string range_name(const std::string& kind, int lo, int hi) { return kind + "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}"; }

} // namespace

Lamination long_arc(const Surface& S, int lo, int hi) {
    Lamination a = S.path.at(lo);
    for (int j = lo + 1; j < hi; ++j) a = encode_halftwist(S.path.at(j), 1)(a);
    return a;
}

NamedCurves standard_disk_decomposition(const Surface& S) {
    NamedCurves r;
    const int b = S.bridges();
    if (b == 0 || S.model != Model::Direct) return r;
    for (int i = 1; i <= b; ++i) {
        r.curves.push_back(path_boundary(S, 2 * i - 1, 2 * i - 1));
        r.names.push_back("pair(" + std::to_string(2 * i - 1) + "," + std::to_string(2 * i) + ")");
    }
    for (int i = 2; i < b; ++i) {
        r.curves.push_back(path_boundary(S, 1, 2 * i - 1));
        r.names.push_back(range_name("nest", 1, 2 * i));
    }
    return dedupe(r);
}

void validate_blocks(const Surface& S, const std::vector<int>& blocks) {
    int sum = 0;
    if (blocks.empty()) throw std::invalid_argument("at least one block is required");
    for (int x : blocks) {
        if (x < 2 || x % 2 != 0) throw std::invalid_argument("blocks must be even and at least 2 (got " + std::to_string(x) + ")");
        sum += x;
    }
    if (sum != S.ms.marked) throw std::invalid_argument("blocks must sum to the marked point count " + std::to_string(S.ms.marked));
}

NamedCurves warped_disk_decomposition(const Surface& S, const std::vector<int>& blocks) {
    validate_blocks(S, blocks);
    NamedCurves r;
    if (S.model != Model::Direct) return r;
    const int c = (int)blocks.size();
    int s = 0;
    for (int j = 0; j < c; ++j) {
        const int bj = blocks[j];
        for (int k = 1; 2 * k < bj; ++k) {
            r.curves.push_back(path_boundary(S, s + 2 * k, s + 2 * k));
            r.names.push_back("pair(" + std::to_string(s + 2 * k) + "," + std::to_string(s + 2 * k + 1) + ")");
        }
        r.curves.push_back(arc_boundary(long_arc(S, s + 1, s + bj)));
        r.names.push_back("pair(" + std::to_string(s + bj) + "," + std::to_string(s + 1) + ")");
        for (int k = 2; k < bj / 2; ++k) {
            r.curves.push_back(path_boundary(S, s + 2, s + 2 * k));
            r.names.push_back(range_name("nest", s + 2, s + 2 * k + 1));
        }
        if (c > 1 || S.genus() == 0) {
            r.curves.push_back(path_boundary(S, s + 1, s + bj - 1));
            r.names.push_back(range_name("block", s + 1, s + bj));
        }
        s += bj;
    }
    int end = 0;
    for (int j = 0; j + 1 < c; ++j) {
        end += blocks[j];
        if (j >= 1) {
            r.curves.push_back(path_boundary(S, 1, end - 1));
            r.names.push_back(range_name("blocks", 1, end));
        }
    }
    return dedupe(r);
}

NamedCurves exterior_curves(const Surface& S) {
    NamedCurves r;
    const int g = S.genus();
    if (S.hyperelliptic()) {
        // quotient picture: pairs {2i-1, 2i} and prefixes {1..2k} of the branch points
        for (int i = 1; i <= g + 1; ++i) {
            r.curves.push_back(path_boundary(S, 2 * i - 1, 2 * i - 1));
            r.names.push_back("q" + std::to_string(i));
        }
        for (int k = 2; k < g; ++k) {
            r.curves.push_back(path_boundary(S, 1, 2 * k - 1));
            r.names.push_back("r" + std::to_string(k));
        }
        return r;
    }
    if (S.model != Model::Direct || g == 0) return r;
    auto add = [&](const std::string& n, const std::string& shown) {
        r.curves.push_back(S.named.at(n));
        r.names.push_back(shown);
    };
    if (g == 1) {
        add("a_0", "m");
        return r;
    }
    add("a_0", "a_0");
    for (int k = 0; k <= g - 2; ++k) add("c_" + std::to_string(k), "c_" + std::to_string(k));
    for (int k = 1; k <= g - 2; ++k) {
        add("a_" + std::to_string(k), "a_" + std::to_string(k));
        add("d_" + std::to_string(k), "d_" + std::to_string(k));
    }
    add("a_" + std::to_string(g - 1), "a_" + std::to_string(g - 1));
    add("d_" + std::to_string(g - 1), "alpha'");
    return r;
}

std::vector<int> default_blocks(int b, int c) {
    if (c < 1 || c > b) throw std::invalid_argument("component count must satisfy 1 <= c <= b");
    std::vector<int> blocks;
    for (int j = 0; j < c; ++j) blocks.push_back(2 * (b / c + (j < b % c ? 1 : 0)));
    return blocks;
}

PantsDecomposition induced_decomposition(const Surface& S, Flavor flavor, const std::vector<int>& blocks) {
    check_surface_hypotheses(S);
    NamedCurves all = exterior_curves(S);
    NamedCurves disk = (flavor == Flavor::Warped && S.bridges() > 0) ? warped_disk_decomposition(S, blocks) : standard_disk_decomposition(S);
    all.curves.insert(all.curves.end(), disk.curves.begin(), disk.curves.end());
    all.names.insert(all.names.end(), disk.names.begin(), disk.names.end());
    if (S.genus() >= 1 && S.bridges() >= 2 && S.model == Model::Direct) {
        all.curves.push_back(*S.disk_boundary);
        all.names.push_back("boundary(D)");
    }
    all = dedupe(all);
    return make_decomposition(S, all.curves, all.names);
}

std::vector<MultiCurve> disk_cut_curves(const Surface& S) {
    const int b = S.bridges();
    if (b < 2 || S.model != Model::Direct) return {};
    std::vector<Lamination> odd, even;
    for (int i = 1; i < b; ++i) {
        odd.push_back(encode_halftwist(S.path[2 * i], 1)(S.path[2 * i - 1]));
        even.push_back(encode_halftwist(S.path[2 * i + 1], -1)(S.path[2 * i]));
    }
    return {arc_boundary(lam_sum(odd)), arc_boundary(lam_sum(even))};
}

Int disk_arc_count(const Surface& S, const MultiCurve& y) {
    if (!S.disk_boundary) return 0;
    Int t = geometric_intersection(S, y, *S.disk_boundary);
    for (const auto& a : disk_cut_curves(S)) t -= geometric_intersection(S, y, a);
    return max0(t) / 2;
}

MultiCurve seed_curve(const Surface& S) {
    check_surface_hypotheses(S);
    const int g = S.genus(), b = S.bridges();
    if (S.hyperelliptic()) {
        if (g != 2) throw std::runtime_error("no seed curve is implemented for closed genus " + std::to_string(g));
        // quotient of the seed: boundary of a braided arc meeting each pair curve four times
        Lamination a = S.path[5];
        for (int j : {4, 3, 3, 2, 4}) a = encode_halftwist(S.path[j], 1)(a);
        return arc_boundary(a);
    }
    if (g == 0) {
        std::vector<Lamination> arcs;
        for (int i = 1; i < b; ++i) arcs.push_back(encode_halftwist(S.path[2 * i], 1)(S.path[2 * i - 1]));
        return arc_boundary(lam_sum(arcs));
    }
    if (g > 2) throw std::runtime_error("no seed curve is implemented for genus " + std::to_string(g));
    MultiCurve c = S.named.at(b == 0 ? "a_0" : "p_" + std::to_string(b));
    for (int k = b; k >= 2; --k)
        for (int j = k; j <= 2 * k - 2; ++j) c = encode_halftwist(S.path[j], 1)(c);
    std::vector<std::string> word = g == 1 ? std::vector<std::string>{"b_0", "b_0"} : std::vector<std::string>{"b_1", "c_0", "c_0", "b_0", "b_1"};
    for (const auto& w : word) c = encode_twist(S.named.at(w), 1)(c);
    return c;
}

std::vector<Int> class_crossings(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma) {
    std::vector<Int> per_curve, out;
    for (const auto& c : P.curves) per_curve.push_back(geometric_intersection(S, gamma, c));
    for (const auto& k : P.classes) out.push_back(per_curve[k.curve] / k.share);
    return out;
}

SeamProfile profile_from_crossings(const PantsDecomposition& P, const std::vector<Int>& m) {
    SeamProfile prof;
    for (std::size_t pi = 0; pi < P.pieces.size(); ++pi) {
        const auto& pc = P.pieces[pi];
        PieceProfile pp;
        pp.piece = (int)pi;
        pp.kind = pc.kind;
        if (pc.kind == PieceKind::TwoMarkedDisk) {
            pp.seams[0] = m[pc.slots[0]] / 2;
        } else if (pc.kind == PieceKind::Pants) {
            Int x[3] = {m[pc.slots[0]], m[pc.slots[1]], m[pc.slots[2]]};
            for (int i = 0; i < 3; ++i) {
                const Int &a = x[i], &b = x[(i + 1) % 3], &c = x[(i + 2) % 3];
                if (a > b + c) {
                    pp.waves[i] = (a - b - c) / 2;
                    pp.seams[i] = b;           // slot i to slot i+1
                    pp.seams[(i + 2) % 3] = c; // slot i+2 to slot i
                    pp.seams[(i + 1) % 3] = 0;
                    goto done;
                }
            }
            for (int i = 0; i < 3; ++i) pp.seams[i] = (x[i] + x[(i + 1) % 3] - x[(i + 2) % 3]) / 2;
        done:;
        }
        prof.push_back(pp);
    }
    return prof;
}

SeamProfile classify_arcs(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma) {
    return profile_from_crossings(P, class_crossings(S, P, gamma));
}

SeamProfile aggregate(const std::vector<SeamProfile>& ps) {
    if (ps.empty()) return {};
    SeamProfile r = ps[0];
    for (std::size_t k = 1; k < ps.size(); ++k)
        for (std::size_t i = 0; i < r.size(); ++i)
            for (int j = 0; j < 3; ++j) {
                r[i].seams[j] += ps[k][i].seams[j];
                r[i].waves[j] += ps[k][i].waves[j];
            }
    return r;
}

Int min_seam(const SeamProfile& p) {
    std::optional<Int> m;
    for (const auto& pp : p) {
        int n = pp.kind == PieceKind::Pants ? 3 : pp.kind == PieceKind::TwoMarkedDisk ? 1 : 0;
        for (int j = 0; j < n; ++j)
            if (!m || pp.seams[j] < *m) m = pp.seams[j];
    }
    return m.value_or(0);
}

bool has_wave(const SeamProfile& p) {
    for (const auto& pp : p)
        for (const auto& w : pp.waves)
            if (sgn(w) > 0) return true;
    return false;
}

bool is_k_seamed(const SeamProfile& p, const Int& k) { return min_seam(p) >= k; }

bool is_k_seamed(const Surface& S, const PantsDecomposition& P, const std::vector<MultiCurve>& gammas, const Int& k) {
    std::vector<SeamProfile> ps;
    for (const auto& g : gammas) ps.push_back(classify_arcs(S, P, g));
    return is_k_seamed(aggregate(ps), k);
}

int circling_number(const Surface& S, const MultiCurve& gamma, const MultiCurve& y, const std::vector<MultiCurve>& X) {
    return annulus_chart(S, y, X, gamma).circling;
}

} // namespace hds
