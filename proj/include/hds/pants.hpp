#pragma once

#include "hds/kernel.hpp"

#include <string>
#include <vector>

namespace hds {

enum class PieceKind { Pants, TwoMarkedDisk, Other };
const char* piece_kind_name(PieceKind k);

// An isotopy class of curve on the marked surface. In the hyperelliptic model a quotient
// curve can stand for two classes upstairs; each then carries half of its crossings.
struct CurveClass {
    int curve = 0;
    int share = 1; // crossings with the class = i(., curve) / share
};

struct Piece {
    PieceKind kind = PieceKind::Other;
    std::vector<int> slots;  // class index per boundary circle
    std::vector<int> points; // marked points inside
    int euler = 0;
};

struct Census {
    std::vector<CurveClass> classes;
    std::vector<Piece> pieces;
    int pants = 0, disks = 0;
    bool valid = false;
    std::string problem;
};

Census piece_census(const Surface& S, const std::vector<MultiCurve>& curves);

struct PantsDecomposition {
    std::vector<MultiCurve> curves;
    std::vector<std::string> names;
    std::vector<CurveClass> classes;
    std::vector<Piece> pieces;
    std::size_t size() const { return classes.size(); }
};

// Runs the census and throws std::runtime_error if it is not a pants decomposition.
PantsDecomposition make_decomposition(const Surface& S, std::vector<MultiCurve> curves, std::vector<std::string> names);
// Same piece structure carried by a homeomorphism onto new curves.
PantsDecomposition transport(const PantsDecomposition& P, std::vector<MultiCurve> images);
int expected_curve_count(const MarkedSurface& ms);

struct NamedCurves {
    std::vector<MultiCurve> curves;
    std::vector<std::string> names;
};

// Curves inside D. Pairs (2i-1, 2i) and prefix nestings {1..2i}.
// Arc from point lo to point hi passing on one side of the points between them.
Lamination long_arc(const Surface& S, int lo, int hi);
NamedCurves standard_disk_decomposition(const Surface& S);
// blocks: even sizes summing to 2b. Pairs (s+2, s+3), ..., (s+b_j, s+1) inside each block.
NamedCurves warped_disk_decomposition(const Surface& S, const std::vector<int>& blocks);
// Exterior curves: R and alpha' in genus >= 2, the meridian m on the torus.
NamedCurves exterior_curves(const Surface& S);

enum class Flavor { Standard, Warped };
PantsDecomposition induced_decomposition(const Surface& S, Flavor flavor, const std::vector<int>& blocks = {});
void check_surface_hypotheses(const Surface& S);
std::vector<int> default_blocks(int b, int c);
void validate_blocks(const Surface& S, const std::vector<int>& blocks);

MultiCurve seed_curve(const Surface& S);
// The two curves alpha_A, alpha_B that cut the seed arc out of D (b >= 2, genus >= 1).
std::vector<MultiCurve> disk_cut_curves(const Surface& S);
// Arcs of y inside D parallel to the seed arc.
Int disk_arc_count(const Surface& S, const MultiCurve& y);

struct PieceProfile {
    int piece = 0;
    PieceKind kind = PieceKind::Other;
    Int seams[3] = {0, 0, 0}; // pants: seam between slots (0,1), (1,2), (2,0); disk: seams[0]
    Int waves[3] = {0, 0, 0}; // pants: waves based at slot 0, 1, 2
};
using SeamProfile = std::vector<PieceProfile>;

// Crossing numbers of gamma with each class of P.
std::vector<Int> class_crossings(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma);
SeamProfile profile_from_crossings(const PantsDecomposition& P, const std::vector<Int>& m);
SeamProfile classify_arcs(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma);
SeamProfile aggregate(const std::vector<SeamProfile>& ps);
Int min_seam(const SeamProfile& p);
bool has_wave(const SeamProfile& p);
bool is_k_seamed(const SeamProfile& p, const Int& k);
bool is_k_seamed(const Surface& S, const PantsDecomposition& P, const std::vector<MultiCurve>& gammas, const Int& k);

int circling_number(const Surface& S, const MultiCurve& gamma, const MultiCurve& y, const std::vector<MultiCurve>& X);

} // namespace hds
