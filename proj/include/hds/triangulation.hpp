#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

namespace hds {

// Oriented edge labels: i and ~i = -i-1 are the two orientations of edge index i.
using Label = int;
inline int index_of(Label l) { return l >= 0 ? l : ~l; }

class Triangulation;
using TriPtr = std::shared_ptr<const Triangulation>;

// Ideal triangulation of a punctured surface; every vertex is a puncture.
// Each vertex carries a tag (the marked-point label it came from) that survives flips.
class Triangulation {
public:
    explicit Triangulation(std::vector<std::array<Label, 3>> triangles, std::vector<int> tags = {});

    int zeta() const { return zeta_; }
    int num_triangles() const { return (int)triangles_.size(); }
    const std::vector<std::array<Label, 3>>& triangles() const { return triangles_; }
    // Triangle rotated so that l comes first (anticlockwise order).
    const std::array<Label, 3>& corner(Label l) const { return corner_[pos(l)]; }
    int triangle_of(Label l) const { return tri_of_[pos(l)]; }
    const std::vector<std::vector<Label>>& vertices() const { return vertices_; }
    int vertex_of(Label l) const { return vertex_of_[pos(l)]; }
    const std::vector<Label>& vertex_cycle(Label l) const { return vertices_[vertex_of(l)]; }
    int tag(int vertex) const { return tags_[vertex]; }
    int tag_of(Label l) const { return tags_[vertex_of(l)]; }
    const std::vector<int>& tags() const { return tags_; }
    int num_vertices() const { return (int)vertices_.size(); }
    int euler_characteristic() const { return num_vertices() - zeta_ + num_triangles(); }

    bool is_flippable(Label e) const { return triangle_of(e) != triangle_of(~e); }
    // a, b, c, d, e around a flippable edge.
    std::array<Label, 5> square(Label e) const;

    TriPtr flip(Label e) const;
    std::vector<Label> signature() const;
    bool same_as(const Triangulation& o) const { return signature() == o.signature(); }

    // Labels -zeta .. zeta-1 in increasing order.
    std::vector<Label> labels() const;

private:
    int pos(Label l) const { return l + zeta_; }
    int zeta_ = 0;
    std::vector<std::array<Label, 3>> triangles_;
    std::vector<std::array<Label, 3>> corner_;
    std::vector<int> tri_of_;
    std::vector<std::vector<Label>> vertices_;
    std::vector<int> vertex_of_;
    std::vector<int> tags_;
};

// Extend a partial label map to an orientation preserving isometry src -> dst.
// Returns a full map indexed by label + zeta; throws if it does not extend.
std::vector<Label> find_isometry(const Triangulation& src, const Triangulation& dst, const std::map<Label, Label>& partial);

} // namespace hds
