#pragma once

#include "dhb/atlas.hpp"
#include "dhb/certify.hpp"
#include "dhb/frobenius.hpp"
#include "dhb/linlift.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dhb {

using json = nlohmann::json;

inline constexpr const char* report_schema = "dhb-report/1";
inline constexpr const char* certificate_schema = "dhb-certificate/1";

json to_json(const FixedPointVector& v);
json to_json(const Plan& p);
// Degree plus x, y, t in cycle notation: enough to rebuild the map.
json to_json(const HurwitzMap& m);
json summary_json(const HurwitzMap& m);  // degree, v, genus, w cycle type, handle counts, primes
json to_json(const Assembly& a);         // summary, parts and the embedded map
json to_json(const JordanCertificate& c);
json to_json(const BeauvilleEvidence& e);
json to_json(const DHBCertificate& c);
json to_json(const CoverCertificate& c);
json to_json(const MinDegreeResult& r, const SearchBounds& b);
json to_json(const AtlasReport& r);
json to_json(const LiftReport& r);

HurwitzMap map_from_json(const json& j);

// Re-checks a certificate document using only its embedded permutations.
// Returns the list of disagreements; empty means it re-verifies.
std::vector<std::string> verify_certificate(const json& cert);

// Wraps a payload in the versioned report envelope.
json make_report(const std::string& command, const json& input, const json& result, bool pass);

// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace dhb
