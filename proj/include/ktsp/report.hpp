#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ktsp/closed_forms.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/rational.hpp"
#include "ktsp/scan.hpp"
#include "ktsp/theorems.hpp"
#include "ktsp/tsp.hpp"

namespace ktsp {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr int kDisplayDigits = 12;

/// {"value": "p/q", "decimal": "..."}; the decimal is display only.
Json rational_json(const Rational& q);
/// Inverse of rational_json (reads "value" only).
Rational rational_from_json(const Json& j);

Json set_json(const VertexSet& s);
Json eccentricity_json(const EccentricityProfile& p);
Json claim_json(const Claim& c);
Json verdict_json(const TheoremVerdict& v);
Json scan_json(const ScanReport& r);
Json dlw_json(const DlwReport& r);
Json estimate_json(const TspEstimate& e);
Json formula_json(const FormulaValue& f);

/// Minimal reproduction data for one failing or mismatching verdict.
Json reproduction_json(const TheoremVerdict& v);

/// Top-level document: schema, tool, version, command, then `body` keys.
Json report_document(const std::vector<std::string>& command, const Json& body);

/// RFC 4180 quoting for one field.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace ktsp
