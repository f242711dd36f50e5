#include "hds/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace hds {

Pairing marked_point_pairing(const PantsDecomposition& Q) {
    Pairing out;
    for (const auto& pc : Q.pieces)
        if (pc.kind == PieceKind::TwoMarkedDisk) out.push_back({std::min(pc.points[0], pc.points[1]), std::max(pc.points[0], pc.points[1])});
    std::sort(out.begin(), out.end());
    return out;
}

Pairing marked_point_pairing(const Surface& S, const std::vector<MultiCurve>& curves) {
    Census c = piece_census(S, curves);
    if (!c.valid) throw std::runtime_error("not a pants decomposition: " + c.problem);
    PantsDecomposition Q{curves, {}, std::move(c.classes), std::move(c.pieces)};
    return marked_point_pairing(Q);
}

int link_component_count(const Pairing& upper, const Pairing& lower) {
    if (upper.empty() && lower.empty()) return 0;
    std::map<int, int> idx;
    auto id = [&](int x) { return idx.emplace(x, (int)idx.size()).first->second; };
    for (const auto* side : {&upper, &lower})
        for (auto [a, b] : *side) {
            id(a), id(b);
        }
    std::vector<int> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto* side : {&upper, &lower}) {
        std::set<int> seen;
        for (auto [a, b] : *side) {
            if (!seen.insert(a).second || !seen.insert(b).second) throw std::invalid_argument("pairing matches a label twice");
            parent[find(id(a))] = find(id(b));
        }
        if (seen.size() != idx.size()) throw std::invalid_argument("pairings cover different labels");
    }
    int cycles = 0;
    for (int i = 0; i < (int)parent.size(); ++i) cycles += find(i) == i;
    return cycles;
}

// ---- disk detection ----

const char* disk_answer_name(DiskAnswer a) {
    switch (a) {
    case DiskAnswer::Yes: return "yes";
    case DiskAnswer::No: return "no";
    default: return "unknown";
    }
}

namespace {

int p_index(const PantsDecomposition& P, const MultiCurve& c) {
    for (std::size_t i = 0; i < P.curves.size(); ++i)
        if (P.curves[i].w == c.w) return (int)i;
    return -1;
}

// Pair curve around points lo, lo+1 belonging to P, if any.
bool has_pair(const Surface& S, const PantsDecomposition& P, int lo) {
    if (lo < 1 || lo + 1 > S.points) return false;
    return p_index(P, path_boundary(S, lo, lo)) >= 0;
}

Encoding move_encoding(const Surface& S, const PantsDecomposition& P, const DiskMove& m) {
    if (m.kind == "twist") return twist_encoding(S, P.curves.at(m.index), m.power);
    if (m.kind == "half") {
        auto arc = core_arc(P.curves.at(m.index));
        if (!arc) throw std::invalid_argument("half twist about a curve with no core arc");
        return encode_halftwist(*arc, m.power);
    }
    if (m.kind == "slide") return encode_twist(path_boundary(S, m.index, m.index + 1), m.power);
    if (m.kind == "swap") {
        // exchange the pairs (lo, lo+1) and (lo+2, lo+3): the braid s2 s1 s3 s2 on their points
        const int lo = m.index;
        Encoding e(S.T);
        for (int k : {lo + 1, lo, lo + 2, lo + 1}) e.then(encode_halftwist(S.path.at(k), m.power));
        return e;
    }
    throw std::invalid_argument("unknown disk move kind " + m.kind);
}

bool same_move(const DiskMove& a, const DiskMove& b) { return a.kind == b.kind && a.index == b.index && a.power == b.power; }

} // namespace

std::vector<DiskMove> disk_moves(const Surface& S, const PantsDecomposition& P) {
    std::vector<DiskMove> out;
    for (int i = 0; i < (int)P.curves.size(); ++i)
        for (long e : {1L, -1L}) out.push_back({"twist", i, e});
    if (S.model != Model::Direct) return out;
    for (int i = 0; i < (int)P.pieces.size(); ++i) {
        const auto& pc = P.pieces[i];
        if (pc.kind != PieceKind::TwoMarkedDisk) continue;
        for (long e : {1L, -1L}) out.push_back({"half", P.classes[pc.slots[0]].curve, e});
    }
    // a pair disk together with a neighbouring point: the disk it bounds meets the arcs once
    for (int lo = 1; lo + 2 <= S.points; ++lo)
        if (has_pair(S, P, lo) || has_pair(S, P, lo + 1))
            for (long e : {1L, -1L}) out.push_back({"slide", lo, e});
    for (int lo = 1; lo + 3 <= S.points; ++lo)
        if (has_pair(S, P, lo) && has_pair(S, P, lo + 2))
            for (long e : {1L, -1L}) out.push_back({"swap", lo, e});
    return out;
}

MultiCurve apply_move(const Surface& S, const PantsDecomposition& P, const DiskMove& m, const MultiCurve& c) { return move_encoding(S, P, m)(c); }

bool replay_witness(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma, const DiskWitness& w) {
    if (w.target < 0 || w.target >= (int)P.curves.size()) return false;
    auto allowed = disk_moves(S, P);
    MultiCurve c = gamma;
    for (const auto& m : w.moves) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const DiskMove& a) { return same_move(a, m); })) return false;
        c = apply_move(S, P, m, c);
    }
    return c.w == P.curves[w.target].w;
}

DiskVerdict bounds_disk(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma, std::size_t budget) {
    auto comps = curve_components(gamma);
    if (comps.size() != 1 || comps[0].second != 1) throw std::invalid_argument("bounds_disk needs a connected curve");
    if (is_peripheral(gamma)) throw std::invalid_argument("bounds_disk needs an essential curve");
    DiskVerdict v;
    if (int k = p_index(P, gamma); k >= 0) {
        v.answer = DiskAnswer::Yes;
        v.reason = "isotopic to a decomposition curve";
        v.witness = DiskWitness{{}, k};
        return v;
    }
    if (!has_wave(classify_arcs(S, P, gamma))) {
        v.answer = DiskAnswer::No;
        v.reason = "no wave with respect to P and not a decomposition curve";
        return v;
    }
    auto moves = disk_moves(S, P);
    std::vector<Encoding> enc;
    for (const auto& m : moves) enc.push_back(move_encoding(S, P, m));

    struct Node {
        MultiCurve c;
        int parent;
        int move;
    };
    std::vector<Node> nodes{{gamma, -1, -1}};
    using Key = std::tuple<Int, Int, int>; // crossings with P, weight, node
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> open;
    std::set<Weights> seen{gamma.w};
    open.push({geometric_intersection(S, P.curves, gamma), weight(gamma), 0});
    while (!open.empty() && v.explored < budget) {
        auto [cross, wt, id] = open.top();
        open.pop();
        ++v.explored;
        for (std::size_t mi = 0; mi < moves.size(); ++mi) {
            MultiCurve nc = enc[mi](nodes[id].c);
            if (!seen.insert(nc.w).second) continue;
            nodes.push_back({nc, id, (int)mi});
            int k = p_index(P, nc);
            if (k >= 0) {
                DiskWitness w;
                w.target = k;
                for (int x = (int)nodes.size() - 1; nodes[x].parent >= 0; x = nodes[x].parent) w.moves.push_back(moves[nodes[x].move]);
                std::reverse(w.moves.begin(), w.moves.end());
                if (!replay_witness(S, P, gamma, w)) throw std::logic_error("disk witness failed to replay");
                v.answer = DiskAnswer::Yes;
                v.reason = "carried onto a decomposition curve by handlebody moves";
                v.witness = std::move(w);
                return v;
            }
            open.push({geometric_intersection(S, P.curves, nc), weight(nc), (int)nodes.size() - 1});
        }
    }
    v.answer = DiskAnswer::Unknown;
    v.reason = open.empty() ? "move search exhausted without reaching a decomposition curve" : "search budget exhausted";
    return v;
}

// ---- splittings ----

SplittingDescriptor construct_high_distance_splitting(int g, int b, int c, int d, bool with_certificate, const CertifyOptions& opt) {
    if (b < 0 || g < 0) throw std::invalid_argument("genus and bridge number must be nonnegative");
    if (d < 0) throw std::invalid_argument("distance must be nonnegative");
    Surface S = build_surface(g, 2 * b);
    check_surface_hypotheses(S);
    if (b == 0 && c != 0) throw std::invalid_argument("with no marked points the link is empty: components must be 0");
    SplittingDescriptor sd;
    sd.ms = S.ms;
    sd.distance = d;
    sd.blocks = b > 0 ? default_blocks(b, c) : std::vector<int>{};
    sd.upper = induced_decomposition(S, Flavor::Warped, sd.blocks);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    auto tower = iterate_tower(S, P, seed_curve(S), d, opt.limits);
    sd.lower = tower.back();
    sd.upper_pairing = marked_point_pairing(sd.upper);
    sd.lower_pairing = marked_point_pairing(S, sd.lower.curves);
    sd.components = link_component_count(sd.upper_pairing, sd.lower_pairing);
    if (with_certificate) sd.certificate = build_certificate(g, b, sd.blocks, d, opt);
    return sd;
}

std::vector<int> enclosed_points(const Surface& S, const MultiCurve& c) {
    auto side = point_sides(S, c);
    std::vector<int> out;
    for (int p = 1; p <= S.points; ++p)
        if (side[p] != side[S.points]) out.push_back(p);
    return out;
}

FarDiskCurve far_disk_curve(const Surface& S, const PantsDecomposition& P, std::vector<int> points, int n) {
    if (S.model != Model::Direct || S.ms.marked < 6) throw std::invalid_argument("far disk curves need at least six marked points");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const int k = (int)points.size(), m2 = S.ms.marked;
    if (k <= 1 || k >= m2 - 1) throw std::invalid_argument("need 1 < k < 2b - 1 chosen points (got " + std::to_string(k) + ")");
    for (int p : points)
        if (p < 1 || p > m2) throw std::invalid_argument("marked point " + std::to_string(p) + " out of range");

    std::vector<Lamination> arcs;
    for (int j = 0; j + 1 < k; ++j) arcs.push_back(long_arc(S, points[j], points[j + 1]));
    MultiCurve c = arc_boundary(lam_sum(arcs));

    FarDiskCurve out;
    std::set<int> chosen(points.begin(), points.end());
    for (const auto& pc : P.pieces) {
        if (pc.kind != PieceKind::TwoMarkedDisk || !chosen.count(pc.points[0]) || !chosen.count(pc.points[1])) continue;
        int idx = P.classes[pc.slots[0]].curve;
        if (sgn(geometric_intersection(S, c, P.curves[idx])) == 0) {
            out.anchor = idx;
            out.pair_case = true;
            break;
        }
    }
    auto disjoint_from_P = [&](const MultiCurve& z) {
        for (int i = 0; i < (int)P.curves.size(); ++i)
            if (sgn(geometric_intersection(S, z, P.curves[i])) == 0) return i;
        return -1;
    };
    if (out.anchor < 0) out.anchor = disjoint_from_P(c);
    if (out.anchor < 0) {
        // nested disks: a sub-disk around consecutive chosen points, disjoint from c
        for (std::size_t a = 0; a < arcs.size() && out.anchor < 0; ++a)
            for (std::size_t e = a + 1; e <= arcs.size() && out.anchor < 0; ++e) {
                if (a == 0 && e == arcs.size()) continue;
                MultiCurve z = arc_boundary(lam_sum(std::vector<Lamination>(arcs.begin() + a, arcs.begin() + e)));
                if (z.empty() || is_peripheral(z) || z.w == c.w || sgn(geometric_intersection(S, z, c)) != 0) continue;
                if (int i = disjoint_from_P(z); i >= 0) {
                    out.anchor = i;
                    out.via = z;
                }
            }
    }
    if (out.anchor < 0) throw std::runtime_error("no decomposition curve is within two steps of the starting disk curve");

    out.level = out.pair_case ? n + 1 : n + 2;
    auto tower = iterate_tower(S, P, seed_curve(S), out.level);
    Encoding F = twist_encoding(S, lam_sum(tower[out.level - 1].curves), 2);
    out.curve = F(c);

    const MultiCurve& anchor = tower[out.level].curves[out.anchor];
    if (out.via) {
        out.via = F(*out.via);
        if (sgn(geometric_intersection(S, out.curve, *out.via)) != 0 || sgn(geometric_intersection(S, *out.via, anchor)) != 0)
            throw std::logic_error("far disk curve is not two steps from its anchor tower curve");
    } else if (sgn(geometric_intersection(S, out.curve, anchor)) != 0) {
        throw std::logic_error("far disk curve meets its anchor tower curve");
    }
    auto enc = enclosed_points(S, out.curve);
    std::vector<int> rest;
    for (int p = 1; p <= m2; ++p)
        if (!chosen.count(p)) rest.push_back(p);
    if (enc != points && enc != rest) throw std::logic_error("far disk curve does not separate the chosen points");
    return out;
}

int BoundarySpec::genus() const { return std::accumulate(genera.begin(), genera.end(), 0); }

TangleDescriptor extend_to_tangle(const SplittingDescriptor& split, const BoundarySpec& S, const BoundarySpec& Sprime, std::optional<int> target) {
    const int g = split.ms.genus, p2 = split.ms.marked, p = p2 / 2;
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("constraint " + what + " violated");
    };
    for (const auto* side : {&S, &Sprime}) {
        require(side->marked >= 0 && side->marked % 2 == 0, "boundary marked-point count even and nonnegative");
        for (int x : side->genera) require(x >= 0, "boundary genera nonnegative");
    }
    auto num = [](int a, const char* op, int b) { return " (" + std::to_string(a) + " " + op + " " + std::to_string(b) + ")"; };
    require(p2 >= S.marked, "2p >= 2p_S" + num(p2, "<", S.marked));
    require(p2 >= Sprime.marked, "2p >= 2p_S'" + num(p2, "<", Sprime.marked));
    require(g >= S.genus(), "g >= g_S" + num(g, "<", S.genus()));
    require(g >= Sprime.genus(), "g >= g_S'" + num(g, "<", Sprime.genus()));
    if (target) {
        const int lo = S.marked / 2 + Sprime.marked / 2, hi = std::min(S.marked, Sprime.marked) + p;
        require(*target >= lo, "p_S + p_S' <= c" + num(*target, "<", lo));
        require(*target <= hi, "c <= min(2p_S, 2p_S') + p" + num(*target, ">", hi));
    }

    TangleDescriptor t;
    t.ms = split.ms;
    t.S = S;
    t.Sprime = Sprime;
    auto fill = [](TangleSide& side, const BoundarySpec& b) {
        side.removed_loops = b.genera;
        for (int i = 0; i < b.marked / 2; ++i) side.vertical_arcs.push_back(2 * i + 1);
    };
    fill(t.upper, S);
    fill(t.lower, Sprime);
    // a vertical pair meets the splitting surface exactly where the bridge arc did
    t.crossings = p2;
    t.conditions = {
        {"genus(Sigma) = g", true},
        {"|T cap Sigma| = 2p", t.crossings == p2},
        {"2p >= 2p_S", p2 >= S.marked},
        {"2p >= 2p_S'", p2 >= Sprime.marked},
        {"g >= g_S", g >= S.genus()},
        {"g >= g_S'", g >= Sprime.genus()},
    };
    return t;
}

} // namespace hds
