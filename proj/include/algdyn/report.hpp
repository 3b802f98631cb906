#ifndef ALGDYN_REPORT_HPP
#define ALGDYN_REPORT_HPP

#include <string>

#include "algdyn/algebra.hpp"
#include "algdyn/degrees.hpp"
#include "algdyn/rational_map.hpp"
#include "json.hpp"

namespace algdyn::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Fixed-point decimal string, `digits` places after the point.
std::string decimal(double x, int digits = 6);

/// {"schema_version": "1", "command": ..., "inputs": {...}}
Json document(const std::string& command, Json inputs);

Json element(const AlgElement& x);
Json flags(const AlgebraFlags& f);
Json profile(const Algebra& v, const AlgebraProfile& p);
Json sequence(const DegreeSequence& s);
Json asymptotic(const AsymptoticResult& r, const AsymptoticOptions& options);
/// Affine coordinates, reduced homogeneous components (W first) and degree.
Json map(const AffineRationalMap& f);

}  // namespace algdyn::report

#endif  // ALGDYN_REPORT_HPP
