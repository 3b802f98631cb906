#ifndef ALGDYN_PARSE_HPP
#define ALGDYN_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "algdyn/algebra.hpp"
#include "algdyn/induced.hpp"
#include "algdyn/matrix.hpp"
#include "algdyn/multipoly.hpp"

namespace algdyn {

/// Accepted forms:
///   Q[t]/(t^3 - t)        quotient by a polynomial in one named variable
///   C^n                   n copies of Q
///   Mat(n)                n x n matrices
///   A x B, A × B          products of the above
///   {"dim":..,"names":[..],"constants":[[i,j,k,"a/b"],..]}   0-based indices
Algebra parse_algebra(std::string_view text);

/// Structure-constant document accepted by parse_algebra.
std::string algebra_to_json(const Algebra& v);

/// Rational function in a single variable; the first identifier seen names it.
UniRationalFunction parse_ratfunc(std::string_view text);
UniPoly parse_unipoly(std::string_view text, const std::string& var);

/// Polynomial over the given variable names.
MultiPoly parse_multipoly(std::string_view text, const std::vector<std::string>& names);
RatFunc parse_rational_function(std::string_view text, const std::vector<std::string>& names);

/// Nested bracket list of integers, e.g. [[2,1],[1,1]].
IntMatrix parse_matrix(std::string_view text);
std::string matrix_to_string(const IntMatrix& m);

}  // namespace algdyn

#endif  // ALGDYN_PARSE_HPP
