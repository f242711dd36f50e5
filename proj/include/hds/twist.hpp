#pragma once

#include "hds/pants.hpp"

#include <string>
#include <vector>

namespace hds {

// Positive exponents follow the orientation of the complex; the convention is recorded in
// every transcript under this name.
inline constexpr const char* kTwistConvention = "positive = right-handed with respect to the complex orientation";

struct TwistTerm {
    std::vector<MultiCurve> curves; // pairwise disjoint
    long exponent = 0;
};
using TwistWord = std::vector<TwistTerm>; // applied left to right

// Throws std::invalid_argument when Y (or X) has intersecting components.
std::vector<MultiCurve> dehn_twist(const Surface& S, const std::vector<MultiCurve>& X, const std::vector<MultiCurve>& Y, long exponent);
std::vector<MultiCurve> apply_word(const Surface& S, const std::vector<MultiCurve>& X, const TwistWord& word);
void require_disjoint(const Surface& S, const std::vector<MultiCurve>& Y, const char* what);

struct TowerLimits {
    std::size_t max_bits = 1u << 20; // largest coordinate allowed, in bits
};

// [Y^0, ..., Y^n] with Y^0 = tau^2_seed(P) and Y^i = tau^2_{Y^{i-1}}(P).
std::vector<PantsDecomposition> iterate_tower(const Surface& S, const PantsDecomposition& P, const MultiCurve& seed, int n,
                                              const TowerLimits& lim = {});

struct SeamednessReport {
    Int k;
    bool precondition = false;      // gamma k-seamed w.r.t. P
    Int gamma_vs_image;             // min seam of gamma w.r.t. tau^2_gamma(P)
    Int image_vs_P;                 // min over curves of tau^2_gamma(P) of their seams w.r.t. P
    Int P_vs_image;                 // min over curves of P of their seams w.r.t. tau^2_gamma(P)
    bool bullet1 = false, bullet2 = false, bullet3 = false;
    bool ok() const { return precondition && bullet1 && bullet2 && bullet3; }
};
SeamednessReport seamedness_growth_report(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma, const Int& k);

std::size_t max_bits(const MultiCurve& c);

} // namespace hds
