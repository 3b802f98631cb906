#include "algdyn/report.hpp"

#include <cmath>
#include <cstdio>

namespace algdyn::report {

std::string decimal(double x, int digits) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  // "-0.000000" reads oddly in reports.
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

Json document(const std::string& command, Json inputs) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  return doc;
}

Json element(const AlgElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coord_list()) out.push_back(to_string(c));
  return out;
}

Json flags(const AlgebraFlags& f) {
  Json out;
  out["unitary"] = f.unitary;
  out["commutative"] = f.commutative;
  out["associative"] = f.associative;
  out["alternative"] = f.alternative;
  out["power_associative"] = f.power_associative;
  out["abelian"] = f.abelian;
  out["jordan"] = f.jordan;
  return out;
}

Json profile(const Algebra& v, const AlgebraProfile& p) {
  Json out;
  out["dim"] = v.dim();
  out["basis"] = v.names();
  out["flags"] = flags(p.flags);
  out["unit"] = p.unit ? element(*p.unit) : Json(nullptr);
  if (p.reduced_dim) {
    Json nil = Json::array();
    for (const auto& x : p.nilradical_basis) nil.push_back(element(x));
    out["nilradical_basis"] = nil;
    out["reduced_dim"] = *p.reduced_dim;
  } else {
    out["nilradical_basis"] = nullptr;
    out["reduced_dim"] = nullptr;
  }
  if (p.generic_delta) {
    Json g;
    g["delta"] = *p.generic_delta;
    g["k"] = *p.generic_k;
    g["method"] = "sampled";
    g["seed"] = p.seed;
    g["samples"] = p.samples;
    out["generic"] = g;
  } else {
    out["generic"] = nullptr;
  }
  out["dim2_type"] = p.dim2 ? Json(to_string(*p.dim2)) : Json(nullptr);
  return out;
}

Json sequence(const DegreeSequence& s) {
  Json out;
  out["p"] = s.p;
  out["provenance"] = to_string(s.provenance);
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(v.str());
  out["values"] = values;
  if (s.provenance == Provenance::brute_force) out["truncated"] = s.truncated;
  return out;
}

Json asymptotic(const AsymptoticResult& r, const AsymptoticOptions& options) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["max_ratio"] = decimal(r.max_ratio);
  out["slope_drift"] = decimal(r.slope_drift);
  out["slope_window_start"] = r.window_start;
  out["c_max"] = decimal(options.c_max);
  out["slope_epsilon"] = decimal(options.slope_epsilon);
  out["min_length"] = options.min_length;
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["note"] = "C_max is an engineering bound; asymptotic equivalence has no effective constant";
  return out;
}

Json map(const AffineRationalMap& f) {
  Json out;
  out["variables"] = default_variable_names(f.dim());
  out["coordinates"] = to_strings(f);
  const ProjectiveMap proj = homogenize_reduce(f);
  out["homogeneous_variables"] = projective_variable_names(f.dim() + 1);
  out["homogeneous"] = to_strings(proj);
  out["degree"] = std::to_string(proj.degree);
  return out;
}

}  // namespace algdyn::report
