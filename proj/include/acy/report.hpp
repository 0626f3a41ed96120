#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "acy/families.hpp"
#include "acy/scan.hpp"
#include "acy/singular.hpp"
#include "acy/torsion.hpp"

namespace acy {

// All output uses ordered JSON: insertion order is serialization order, so
// equal data serializes to equal bytes. No floats, no timestamps.
using Json = nlohmann::ordered_json;

inline constexpr int k_schema_version = 1;

Json to_json(const FieldSpec& F);
Json to_json(const Fq& a);  // coefficient list [c0, ..., c_{k-1}]
Json to_json(const Monomial& m);
Json to_json(const Poly& f);
Json to_json(const ProjectivePoint& p);
Json to_json(const FamilyInstance& inst);
Json to_json(const NodeReport& r);
Json to_json(const SingularPoint& sp);
Json to_json(const ScanResult& r);
Json to_json(const StabilizeResult& r);
Json to_json(const TranslationCertificate& c);

// Canonical serialization: 2-space indent, trailing newline.
std::string render(const Json& j);

} // namespace acy
