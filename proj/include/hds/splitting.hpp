#pragma once

#include "hds/certify.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hds {

using Pairing = std::vector<std::pair<int, int>>; // sorted, smaller label first

// Recomputes the piece census from the coordinates; throws if they are not a pants decomposition.
Pairing marked_point_pairing(const Surface& S, const std::vector<MultiCurve>& curves);
Pairing marked_point_pairing(const PantsDecomposition& Q);
int link_component_count(const Pairing& upper, const Pairing& lower);

// ---- disk detection ----
enum class DiskAnswer { Yes, No, Unknown };
const char* disk_answer_name(DiskAnswer a);

// Homeomorphisms of the surface that extend over the handlebody V_P and preserve its arcs.
struct DiskMove {
    std::string kind;  // "twist" (about a P-curve), "half" (about the core arc of a pair curve), "slide", "swap"
    int index = 0;     // P-curve index, or first point of the slid or swapped pairs
    long power = 0;
};
std::vector<DiskMove> disk_moves(const Surface& S, const PantsDecomposition& P);
MultiCurve apply_move(const Surface& S, const PantsDecomposition& P, const DiskMove& m, const MultiCurve& c);

struct DiskWitness {
    std::vector<DiskMove> moves; // applied in order, they carry gamma onto P-curve `target`
    int target = -1;
};
struct DiskVerdict {
    DiskAnswer answer = DiskAnswer::Unknown;
    std::string reason;
    std::optional<DiskWitness> witness;
    std::size_t explored = 0;
};
DiskVerdict bounds_disk(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma, std::size_t budget = 4000);
bool replay_witness(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma, const DiskWitness& w);

// ---- splittings ----
struct SplittingDescriptor {
    MarkedSurface ms;
    std::vector<int> blocks;
    int distance = 0;
    PantsDecomposition upper, lower;
    Pairing upper_pairing, lower_pairing;
    int components = 0;
    std::optional<DistanceCertificate> certificate;
};

SplittingDescriptor construct_high_distance_splitting(int g, int b, int c, int d, bool with_certificate = true,
                                                      const CertifyOptions& opt = {});

struct FarDiskCurve {
    MultiCurve curve;
    int level = 0;     // tower level whose twist carries the starting curve
    int anchor = -1;   // P-curve disjoint from the starting curve (or from `via`)
    bool pair_case = false;
    std::optional<MultiCurve> via; // nested case: curve disjoint from both the starting curve and the anchor
};
FarDiskCurve far_disk_curve(const Surface& S, const PantsDecomposition& P, std::vector<int> points, int n);
// Labels on the side of a separating curve not containing point 2b (or all when it is empty).
std::vector<int> enclosed_points(const Surface& S, const MultiCurve& c);

struct BoundarySpec {
    std::vector<int> genera; // genus of each component
    int marked = 0;          // 2p
    int genus() const;
};
struct TangleSide {
    std::vector<int> removed_loops;   // genera of the spine loops removed
    std::vector<int> vertical_arcs;   // bridge arcs (by first point) replaced by vertical pairs
};
struct TangleDescriptor {
    MarkedSurface ms;
    BoundarySpec S, Sprime;
    TangleSide upper, lower;
    int crossings = 0; // |T cap Sigma|
    std::vector<std::pair<std::string, bool>> conditions;
};
TangleDescriptor extend_to_tangle(const SplittingDescriptor& split, const BoundarySpec& S, const BoundarySpec& Sprime,
                                  std::optional<int> target_components = std::nullopt);

} // namespace hds
