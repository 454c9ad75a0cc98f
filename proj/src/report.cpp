#include "ktsp/report.hpp"

#include "ktsp/errors.hpp"

namespace ktsp {

Json rational_json(const Rational& q) {
  return Json{{"value", to_string(q)}, {"decimal", to_decimal(q, kDisplayDigits)}};
}

Rational rational_from_json(const Json& j) { return parse_rational(j.at("value").get<std::string>()); }

Json set_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json eccentricity_json(const EccentricityProfile& p) {
  Json ecc = Json::array();
  Json witness = Json::array();
  for (std::size_t v = 0; v < p.ecc.size(); ++v) {
    ecc.push_back(to_string(p.ecc[v]));
    witness.push_back(set_json(p.witness[v]));
  }
  return Json{{"ecc", ecc},
              {"witness", witness},
              {"radius", rational_json(p.radius)},
              {"diameter", rational_json(p.diameter)}};
}

Json claim_json(const Claim& c) {
  Json out{{"name", c.name},
           {"relation", c.relation},
           {"lhs", rational_json(c.lhs)},
           {"rhs", rational_json(c.rhs)},
           {"holds", c.holds},
           {"equality", c.equality}};
  out["predicted_equality"] = c.predicted_equality ? Json(*c.predicted_equality) : Json(nullptr);
  out["agreement"] = c.agreement();
  out["certificate"] = c.certificate;
  return out;
}

Json verdict_json(const TheoremVerdict& v) {
  Json out{{"theorem", v.theorem}, {"instance", v.instance}, {"k", v.k}};
  if (v.j) out["j"] = *v.j;
  out["holds"] = v.holds();
  out["equality"] = v.equality();
  out["agreement"] = v.agreement();
  Json claims = Json::array();
  for (const Claim& c : v.claims) claims.push_back(claim_json(c));
  out["claims"] = claims;
  Json details = Json::object();
  for (const auto& [key, value] : v.details) details[key] = value;
  out["details"] = details;
  return out;
}

Json reproduction_json(const TheoremVerdict& v) {
  Json out{{"theorem", v.theorem}, {"instance", v.instance}, {"k", v.k}};
  if (v.j) out["j"] = *v.j;
  for (const Claim& c : v.claims) {
    if (c.holds && c.agreement()) continue;
    out["claim"] = c.name;
    out["lhs"] = to_string(c.lhs);
    out["rhs"] = to_string(c.rhs);
    out["equality"] = c.equality;
    out["predicted_equality"] = c.predicted_equality ? Json(*c.predicted_equality) : Json(nullptr);
    out["witness"] = c.certificate;
    break;
  }
  return out;
}

Json scan_json(const ScanReport& r) {
  Json per_k = Json::array();
  for (const KScanSummary& s : r.per_k) {
    per_k.push_back(Json{{"k", s.k},
                         {"graphs", s.graphs},
                         {"min_mutspk", rational_json(s.min_mean)},
                         {"argmin", s.argmin},
                         {"argmin_labeled", s.argmin_labeled},
                         {"max_mutspk", rational_json(s.max_mean)},
                         {"argmax", s.argmax},
                         {"argmax_labeled", s.argmax_labeled},
                         {"tsp2steiner_equalities", s.tsp2steiner_equalities},
                         {"permavg_equalities", s.permavg_equalities},
                         {"lower_bound_equalities", s.lower_equalities},
                         {"upper_bound_equalities", s.upper_equalities}});
  }
  Json degree = Json::array();
  for (const DegreeFinding& f : r.degree) {
    degree.push_back(Json{{"k", f.k},
                          {"graphs_meeting_degree", f.graphs_meeting_degree},
                          {"not_all_hamiltonian", f.not_all_hamiltonian},
                          {"example", f.example ? Json(*f.example) : Json(nullptr)},
                          {"asserted", f.asserted}});
  }
  Json bundles = Json::array();
  for (const TheoremVerdict& v : r.bundles) bundles.push_back(reproduction_json(v));
  return Json{{"order", r.order},
              {"source", r.source},
              {"theorems", r.theorems},
              {"graphs", r.graphs},
              {"failures", r.failures},
              {"mismatches", r.mismatches},
              {"ok", r.ok()},
              {"triple_equalities", r.triple_equalities},
              {"wtsp3_checked", r.wtsp3_checked},
              {"per_k", per_k},
              {"min_degree_findings", degree},
              {"reproduction", bundles}};
}

Json estimate_json(const TspEstimate& e) {
  return Json{{"estimate", rational_json(e.estimate)},
              {"variance_of_mean", rational_json(e.variance_of_mean)},
              {"standard_error", e.standard_error},
              {"samples", e.samples},
              {"seed", e.seed}};
}

Json dlw_json(const DlwReport& r) {
  const Rational d(r.d);
  Json out{{"d", r.d},
           {"k", r.k},
           {"tree", r.tree},
           {"against", r.against},
           {"exact", r.exact},
           {"tree_mutspk", rational_json(r.tree_mean)},
           {"against_mutspk", rational_json(r.against_mean)},
           {"tree_over_d", rational_json(r.tree_mean / d)},
           {"against_over_d", rational_json(r.against_mean / d)},
           {"heuristic_coefficient", rational_json(r.heuristic_coefficient)},
           {"heuristic", rational_json(r.heuristic_coefficient * d)},
           {"cycle_coefficient", rational_json(r.cycle_coefficient)},
           {"doubling_checked", r.doubling_checked},
           {"tree_beats_against", r.tree_beats_against}};
  if (r.tree_estimate) out["tree_estimate"] = estimate_json(*r.tree_estimate);
  if (r.against_estimate) out["against_estimate"] = estimate_json(*r.against_estimate);
  return out;
}

Json formula_json(const FormulaValue& f) {
  Json out{{"family", f.family.to_string()}, {"k", f.k}};
  out["exact"] = f.exact ? rational_json(*f.exact) : Json(nullptr);
  out["asymptotic"] = f.asymptotic ? rational_json(*f.asymptotic) : Json(nullptr);
  if (f.asymptotic) out["asymptotic_unit"] = f.asymptotic_unit;
  return out;
}

Json report_document(const std::vector<std::string>& command, const Json& body) {
  Json out{{"schema", kReportSchema}, {"tool", "ktsp"}, {"version", KTSP_VERSION}, {"command", command}};
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

}  // namespace ktsp
