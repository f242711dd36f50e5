#include "hds/surface.hpp"

#include <stdexcept>

namespace hds {

const char* model_name(Model m) {
    switch (m) {
    case Model::Direct: return "direct";
    case Model::Hyperelliptic: return "hyperelliptic_quotient";
    case Model::Degenerate: return "degenerate";
    }
    return "?";
}

Lamination rebind(const TriPtr& T, const Lamination& L) { return {T, L.w}; }

Lamination lam_sum(const Lamination& a, const Lamination& b) {
    Lamination r = a;
    for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] += b.w[i];
    return r;
}

Lamination lam_sum(const std::vector<Lamination>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty lamination sum");
    Lamination r = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) r = lam_sum(r, parts[k]);
    return r;
}

Lamination path_boundary(const Surface& S, int first, int last) {
    std::vector<Lamination> arcs;
    for (int k = first; k <= last; ++k) arcs.push_back(S.path.at(k));
    return arc_boundary(lam_sum(arcs));
}

namespace {

Label arc_edge(const Lamination& a) {
    for (int i = 0; i < (int)a.w.size(); ++i)
        if (sgn(a.w[i]) < 0) return i;
    throw std::logic_error("path arc is not an edge arc");
}

// Label the punctures of a standard model along its arc path s_1..s_{n-1}.
std::vector<int> path_tags(const StandardModel& m, int n) {
    const auto& T = *m.T;
    std::vector<int> tags(T.num_vertices(), 0);
    if (n == 1) {
        tags[0] = 1;
        return tags;
    }
    auto ends = [&](int k) {
        Label e = arc_edge(m.arcs.at("s_" + std::to_string(k)));
        return std::pair<int, int>{T.vertex_of(e), T.vertex_of(~e)};
    };
    auto [u, v] = ends(1);
    int first = u;
    if (n >= 3) {
        auto [x, y] = ends(2);
        first = (u == x || u == y) ? v : u;
    }
    tags[first] = 1;
    int cur = first;
    for (int k = 1; k < n; ++k) {
        auto [x, y] = ends(k);
        int nxt = x == cur ? y : x;
        if (x != cur && y != cur) throw std::logic_error("arc path is not connected");
        tags[nxt] = k + 1;
        cur = nxt;
    }
    return tags;
}

TriPtr tetrahedron(std::vector<int> tags) {
    return std::make_shared<Triangulation>(std::vector<std::array<Label, 3>>{{0, 1, 2}, {3, ~4, ~0}, {4, ~5, ~1}, {5, ~3, ~2}}, std::move(tags));
}

void adopt_standard(Surface& S, const StandardModel& m, int n, bool labelled) {
    std::vector<int> tags = labelled ? path_tags(m, n) : std::vector<int>(m.T->num_vertices(), 0);
    S.T = std::make_shared<Triangulation>(m.T->triangles(), tags);
    for (const auto& [k, c] : m.curves) S.named.emplace(k, rebind(S.T, c));
    if (labelled) {
        S.points = n;
        S.path.assign(n, Lamination{S.T, Weights(S.T->zeta(), 0)});
        for (int k = 1; k < n; ++k) S.path[k] = rebind(S.T, m.arcs.at("s_" + std::to_string(k)));
    }
}

} // namespace

Surface build_surface(int genus, int marked) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (marked < 0) throw std::invalid_argument("marked point count must be nonnegative");
    if (marked % 2 != 0) throw std::invalid_argument("marked point count must be even (got " + std::to_string(marked) + ")");
    Surface S;
    S.ms = {genus, marked};
    const int b = marked / 2;
    if (genus == 0 && marked <= 2) {
        std::vector<int> tags(4, 0);
        for (int k = 0; k < marked; ++k) tags[k] = k + 1;
        S.model = Model::Degenerate;
        S.T = S.complex = tetrahedron(tags);
        for (int k = 0; k < marked; ++k) S.marked_vertices.push_back(k);
        S.constructible = false;
        return S;
    }
    if (genus >= 2 && marked == 0) {
        S.model = Model::Hyperelliptic;
        const int n = 2 * genus + 2;
        adopt_standard(S, load_standard(0, n), n, true);
        S.named.clear();
        auto closed = load_standard(genus, 1);
        S.complex = std::make_shared<Triangulation>(closed.T->triangles(), std::vector<int>{0});
        return S;
    }
    S.model = Model::Direct;
    if (marked == 0) {
        // torus: a single unlabelled puncture stands in for the closed surface
        adopt_standard(S, load_standard(1, 1), 1, false);
    } else {
        adopt_standard(S, load_standard(genus, marked), marked, true);
    }
    S.complex = S.T;
    for (int p = 1; p <= marked; ++p)
        for (int v = 0; v < S.T->num_vertices(); ++v)
            if (S.T->tag(v) == p) S.marked_vertices.push_back(v);
    if (genus == 0 && marked == 4) S.constructible = false;
    if (genus >= 1 && b >= 1) S.disk_boundary = path_boundary(S, 1, marked - 1);
    return S;
}

} // namespace hds
