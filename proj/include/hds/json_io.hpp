#pragma once

#include "hds/splitting.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hds::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kEngineVersion = "hds-engine 1.0.0";

// Every document: {"schema_version", "kind", ...}; all numbers are decimal strings.
json document(const std::string& kind);
std::string dump(const json& j);
std::string content_id(const json& j); // 16 hex digits of a 64-bit FNV-1a hash of the canonical dump
void require_kind(const json& j, const std::string& kind);

json int_json(const Int& x);
Int int_from(const json& j);
int small_from(const json& j, const char* what);
json weights_json(const Weights& w);
Weights weights_from(const json& j);

json surface_json(const MarkedSurface& ms);
MarkedSurface surface_from(const json& j);

json triangulation_json(const Triangulation& T);
json complex_json(const Surface& S);

struct CurveFile {
    MarkedSurface ms;
    std::vector<std::string> names;
    std::vector<Weights> curves;
};
json curves_json(const MarkedSurface& ms, const std::vector<MultiCurve>& curves, const std::vector<std::string>& names = {});
CurveFile curves_from(const json& j);
// Validates coordinates against the surface; strips nothing.
std::vector<MultiCurve> bind_curves(const Surface& S, const CurveFile& f);

json decomposition_json(const Surface& S, const PantsDecomposition& P);
json seam_profile_json(const PantsDecomposition& P, const SeamProfile& prof);
json traced_json(const TracedCurve& t);
json pairing_json(const Pairing& p);
Pairing pairing_from(const json& j);

json obligation_json(const ObligationRecord& o);
json certificate_json(const DistanceCertificate& c);
DistanceCertificate certificate_from(const json& j);
json check_report_json(const CheckReport& r);

json disk_verdict_json(const DiskVerdict& v);
json splitting_json(const Surface& S, const SplittingDescriptor& sd);
json tangle_json(const TangleDescriptor& t);
json growth_json(const SeamednessReport& r);
// Tower transcript: per level the curves, piece graph and recomputed marked-point pairing.
json tower_json(const Surface& S, const std::vector<PantsDecomposition>& levels);

// Parses any document this module writes and re-serializes it canonically.
json canonical(const json& j);

} // namespace hds::io
