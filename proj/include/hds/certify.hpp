#pragma once

#include "hds/twist.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hds {

struct ObligationRecord {
    std::string name; // S (structure), O1 .. O6
    std::string statement;
    std::vector<std::pair<std::string, Int>> counts; // exact minima the verdict is based on
    bool pass = false;
};

struct DistanceCertificate {
    MarkedSurface ms;
    std::vector<int> blocks;
    int n = 0; // claimed bound
    std::vector<MultiCurve> P, Pprime;
    MultiCurve seed;
    std::vector<std::vector<MultiCurve>> tower; // Y^0 .. Y^n
    std::vector<ObligationRecord> obligations;
};

struct CertifyOptions {
    TowerLimits limits;
};

DistanceCertificate build_certificate(int g, int b, const std::vector<int>& blocks, int n, const CertifyOptions& opt = {});

struct CheckReport {
    bool pass = false;
    std::vector<std::string> failed; // obligation names, in order
    std::vector<std::string> messages;
    std::vector<ObligationRecord> recomputed;
};

// Recomputes every obligation from the stored coordinates; stored counts are only compared.
CheckReport check_certificate(const DistanceCertificate& cert);

struct DistanceBound {
    std::optional<int> bound;
    std::size_t visited = 0;
};
// Max-norm cap used when none is given (measured in this engine's edge coordinates).
inline constexpr long kDefaultDistanceCap = 512;

// Breadth-first search in the curve graph restricted to curves of max-norm <= cap.
// Only an upper bound for the distance between the sampled vertices.
DistanceBound distance_upper_bound(const Surface& S, const std::vector<MultiCurve>& A, const std::vector<MultiCurve>& B, const Int& cap,
                                   std::size_t max_visited = 4000);

Int max_norm(const MultiCurve& c);

} // namespace hds
