#include "hds/triangulation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hds {

namespace {

std::array<Label, 3> canonical(const std::array<Label, 3>& t) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (t[i] < t[best]) best = i;
    return {t[best], t[(best + 1) % 3], t[(best + 2) % 3]};
}

} // namespace

Triangulation::Triangulation(std::vector<std::array<Label, 3>> triangles, std::vector<int> tags) {
    for (auto& t : triangles) t = canonical(t);
    std::sort(triangles.begin(), triangles.end());
    triangles_ = std::move(triangles);
    zeta_ = (int)triangles_.size() * 3 / 2;
    if ((int)triangles_.size() * 3 != 2 * zeta_) throw std::invalid_argument("triangle count incompatible with an edge pairing");
    corner_.assign(2 * zeta_, {0, 0, 0});
    tri_of_.assign(2 * zeta_, -1);
    for (int ti = 0; ti < (int)triangles_.size(); ++ti) {
        const auto& t = triangles_[ti];
        for (int i = 0; i < 3; ++i) {
            Label l = t[i];
            if (l < -zeta_ || l >= zeta_ || tri_of_[pos(l)] != -1) throw std::invalid_argument("bad or repeated edge label");
            tri_of_[pos(l)] = ti;
            corner_[pos(l)] = {t[i], t[(i + 1) % 3], t[(i + 2) % 3]};
        }
    }
    vertex_of_.assign(2 * zeta_, -1);
    std::set<Label> unused;
    for (Label l = -zeta_; l < zeta_; ++l) unused.insert(l);
    while (!unused.empty()) {
        std::vector<Label> cyc{*unused.begin()};
        unused.erase(unused.begin());
        while (true) {
            Label nb = ~corner(cyc.back())[2];
            auto it = unused.find(nb);
            if (it == unused.end()) break;
            cyc.push_back(nb);
            unused.erase(it);
        }
        for (Label l : cyc) vertex_of_[pos(l)] = (int)vertices_.size();
        vertices_.push_back(std::move(cyc));
    }
    if (tags.empty()) {
        for (int v = 0; v < (int)vertices_.size(); ++v) tags.push_back(v + 1);
    }
    if (tags.size() != vertices_.size()) throw std::invalid_argument("vertex tag count mismatch");
    tags_ = std::move(tags);
}

std::array<Label, 5> Triangulation::square(Label e) const {
    if (!is_flippable(e)) throw std::logic_error("edge is not flippable");
    const auto& A = corner(e);
    const auto& B = corner(~e);
    return {A[1], A[2], B[1], B[2], e};
}

TriPtr Triangulation::flip(Label edge) const {
    auto [a, b, c, d, e] = square(edge);
    int ta = triangle_of(edge), tb = triangle_of(~edge);
    std::vector<std::array<Label, 3>> tris;
    tris.reserve(triangles_.size());
    for (int i = 0; i < (int)triangles_.size(); ++i)
        if (i != ta && i != tb) tris.push_back(triangles_[i]);
    if (edge >= 0) {
        tris.push_back({e, d, a});
        tris.push_back({~e, b, c});
    } else {
        tris.push_back({~e, d, a});
        tris.push_back({e, b, c});
    }
    auto T = std::make_shared<Triangulation>(std::move(tris));
    for (int v = 0; v < T->num_vertices(); ++v) {
        for (Label l : T->vertices_[v]) {
            if (l == edge || l == ~edge) continue;
            T->tags_[v] = tag_of(l);
            break;
        }
    }
    return T;
}

std::vector<Label> Triangulation::signature() const {
    std::vector<Label> s;
    for (const auto& t : triangles_) s.insert(s.end(), t.begin(), t.end());
    return s;
}

std::vector<Label> Triangulation::labels() const {
    std::vector<Label> out;
    for (Label l = -zeta_; l < zeta_; ++l) out.push_back(l);
    return out;
}

std::vector<Label> find_isometry(const Triangulation& src, const Triangulation& dst, const std::map<Label, Label>& partial) {
    int z = src.zeta();
    if (dst.zeta() != z) throw std::invalid_argument("isometry between triangulations of different size");
    const int unset = 1 << 30;
    std::vector<Label> m(2 * z, unset);
    std::vector<Label> stack;
    for (auto [f, t] : partial) {
        m[f + z] = t;
        stack.push_back(f);
    }
    auto order = [](const Triangulation& T, Label l) { return T.vertex_cycle(l).size(); };
    while (!stack.empty()) {
        Label f = stack.back();
        stack.pop_back();
        Label t = m[f + z];
        std::array<std::pair<Label, Label>, 2> nbs{{{~f, ~t}, {src.corner(f)[1], dst.corner(t)[1]}}};
        for (auto [nf, nt] : nbs) {
            if (m[nf + z] != unset) {
                if (m[nf + z] != nt) throw std::runtime_error("label map does not extend to an isometry");
            } else {
                if (order(src, nf) != order(dst, nt)) throw std::runtime_error("label map does not extend to an isometry");
                m[nf + z] = nt;
                stack.push_back(nf);
            }
        }
    }
    std::vector<char> hit(2 * z, 0);
    for (int i = 0; i < 2 * z; ++i) {
        if (m[i] == unset) throw std::runtime_error("label map does not cover the surface");
        if (m[i] < -z || m[i] >= z || hit[m[i] + z]) throw std::runtime_error("label map is not a bijection");
        hit[m[i] + z] = 1;
    }
    return m;
}

} // namespace hds
