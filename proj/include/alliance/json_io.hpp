#pragma once

#include <json.hpp>

#include "alliance/analysis.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

// {"degree": d, "coeffs": {"k": "decimal-string", ...}}; zero coefficients
// are omitted, arbitrary precision survives as decimal strings.
nlohmann::json poly_to_json(const Polynomial& p);
// Throws parse_error on malformed schema, negative values, or a degree field
// that disagrees with the coefficient keys.
Polynomial poly_from_json(const nlohmann::json& j);

// {"polynomial": ..., "alliance_number": k, "count": "decimal",
//  "unimodal": bool, "log_concave": bool, "mode": k|null,
//  "checks": {name: bool}}
nlohmann::json report_to_json(const AllianceReport& r);
AllianceReport report_from_json(const nlohmann::json& j);

}  // namespace alliance
