#pragma once

#include "hds/surface.hpp"

#include <optional>
#include <vector>

namespace hds {

using MultiCurve = Lamination;

struct Normalized {
    MultiCurve curve;
    Int stripped; // inessential components removed (with multiplicity)
};

// Throws std::invalid_argument for inadmissible coordinates.
Normalized normalize(const Surface& S, const Weights& raw);

// Connected components of the canonical representative on the marked surface.
Int count_components(const Surface& S, const MultiCurve& c);
// Components of the coordinate multicurve (one entry per isotopy class, with multiplicity).
std::vector<std::pair<MultiCurve, Int>> curve_components(const MultiCurve& c);

Int geometric_intersection(const Surface& S, const MultiCurve& x, const MultiCurve& y);
Int geometric_intersection(const Surface& S, const std::vector<MultiCurve>& xs, const MultiCurve& y);
bool is_isotopic(const MultiCurve& x, const MultiCurve& y);

// Parity class (0 or 1) of each labelled point 1..points relative to a separating curve.
// Index 0 of the result is unused.
std::vector<int> point_sides(const Surface& S, const MultiCurve& curve);

struct LiftInfo {
    int sheets = 1;              // preimage components downstairs -> upstairs
    bool two_point_side = false; // bounds a disk with two branch points
    Int classes = 1;             // upstairs isotopy classes represented
};
LiftInfo lift_info(const Surface& S, const MultiCurve& connected);

// Arc inside a curve that bounds a disk with exactly two points; nullopt if there is none.
std::optional<Lamination> core_arc(const MultiCurve& connected);

// Twist (power on the marked surface) about a multicurve whose components are disjoint.
Encoding twist_encoding(const Surface& S, const MultiCurve& multicurve, long power);

// Explicit representative: per triangle corner a bundle of parallel normal arcs.
struct Bundle {
    int triangle = 0;
    Label from = 0, to = 0; // the arcs run from edge `from` to edge `to` around their shared vertex
    Int weight;
    Int from_offset, to_offset; // first strand position (1-based, from the tail) on each edge
};
struct TracedCurve {
    TriPtr T;
    std::vector<Bundle> bundles;
};
TracedCurve trace(const MultiCurve& c);
Weights coordinates(const TracedCurve& t);

struct EfficientConfiguration {
    std::vector<TracedCurve> traces;
    std::vector<std::vector<Int>> crossings;
};
EfficientConfiguration mutual_efficient_position(const Surface& S, const std::vector<MultiCurve>& collections);

// I-fibred annulus around y: X meets it in i(y, X) fibres, gamma in i(gamma, y) strands.
struct AnnulusChart {
    Int fibers;
    Int strands;
    int circling = 0;
};
AnnulusChart annulus_chart(const Surface& S, const MultiCurve& y, const std::vector<MultiCurve>& X, const MultiCurve& gamma);

// ---- regions of the complement of a multicurve ----
struct Region {
    std::vector<int> points;     // labelled points (tags) inside
    int unlabelled = 0;          // unlabelled punctures inside
    std::vector<int> slots;      // input curve index for each boundary circle (repeated when both sides)
    int euler = 0;               // Euler characteristic with the punctures filled in
};
struct RegionMap {
    std::vector<Region> regions;
    std::vector<std::pair<int, int>> sides; // per input curve: the regions on its two sides
};
// Curves must be pairwise disjoint, pairwise non-isotopic, connected and essential.
RegionMap complement_regions(const std::vector<MultiCurve>& curves);

} // namespace hds
