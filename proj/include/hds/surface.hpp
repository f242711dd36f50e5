#pragma once

#include "hds/engine.hpp"
#include "hds/loaders.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hds {

struct MarkedSurface {
    int genus = 0;
    int marked = 0; // 2b
    int bridges() const { return marked / 2; }
    bool operator==(const MarkedSurface&) const = default;
};

// How curves of the marked surface are coordinatised.
//   direct        - curves live on an ideal triangulation whose punctures are the marked points
//   hyperelliptic - closed genus >= 2: curves are stored through the quotient sphere
//                   with 2g+2 branch points (symmetric curves only)
//   degenerate    - (0,0) and (0,2): a closed complex with no essential curves
enum class Model { Direct, Hyperelliptic, Degenerate };

const char* model_name(Model m);

struct Surface {
    MarkedSurface ms;
    Model model = Model::Direct;

    // Coordinate triangulation. Vertex tags are the point labels 1..points (0 = unlabelled puncture).
    TriPtr T;
    // Named curves of the standard model (a_i, b_i, c_i, d_i, p_i) on T.
    std::map<std::string, Lamination> named;
    // path[k] joins points k and k+1 (k = 1..points-1); path[0] is unused.
    std::vector<Lamination> path;
    int points = 0; // labelled points of T: marked points, or branch points when hyperelliptic

    // Closed-surface complex used for export (equal to T except in the hyperelliptic case).
    TriPtr complex;
    std::vector<int> marked_vertices; // complex vertex of marked point 1..2b

    // Boundary of the designated disk D, when it is an essential curve.
    std::optional<Lamination> disk_boundary;

    bool constructible = true;

    int genus() const { return ms.genus; }
    int bridges() const { return ms.bridges(); }
    bool hyperelliptic() const { return model == Model::Hyperelliptic; }
};

// Throws std::invalid_argument for odd or negative input.
Surface build_surface(int genus, int marked_points);

// Sum of laminations on one triangulation.
Lamination lam_sum(const std::vector<Lamination>& parts);
Lamination lam_sum(const Lamination& a, const Lamination& b);
Lamination rebind(const TriPtr& T, const Lamination& L);

// Boundary curve of a regular neighbourhood of the given path arcs s_i..s_j (inclusive).
Lamination path_boundary(const Surface& S, int first, int last);

} // namespace hds
