#ifndef ALGDYN_MULTIPOLY_HPP
#define ALGDYN_MULTIPOLY_HPP

#include <array>
#include <ostream>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "algdyn/number.hpp"

namespace algdyn {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree. Ordered graded-lexicographically
/// with variable 0 the most significant.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exps{};
  std::uint32_t degree = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exps == b.exps;
  }
};

/// a < b in graded lexicographic order.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.exps < b.exps;
}

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in strictly decreasing grlex order with nonzero
/// coefficients, so the representation is canonical.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(check_nvars(nvars)) {}
  /// Constant; a zero variable count lets constants combine with any ring.
  MultiPoly(int c) : MultiPoly(0, Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(std::size_t nvars, const Rational& c);

  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(std::size_t nvars, const Monomial& m, const Rational& c);
  /// Sorts and combines arbitrary terms.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
  /// Constant term value (0 when absent).
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().coeff; }
  /// -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree); }
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Same polynomial viewed in a larger ring (new variables appended).
  MultiPoly with_nvars(std::size_t nvars) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);
  /// Compares terms only, so a variable-free constant equals the same
  /// constant in any ring.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  static std::size_t check_nvars(std::size_t n);
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned n);
MultiPoly derivative(const MultiPoly& p, std::size_t var);
Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point);

/// Replaces variable i by values[i]; all values share one ring.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& values);

/// Adds a homogenizing variable at index 0 and raises every term to `degree`.
MultiPoly homogenize(const MultiPoly& p, int degree);
/// Sets variable `var` to 1 and removes it from the ring.
MultiPoly dehomogenize(const MultiPoly& p, std::size_t var = 0);

/// Coefficients of p as a polynomial in `var` (index = power); each
/// coefficient lives in the same ring with `var` absent.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);
MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var, std::size_t nvars);

/// Componentwise minimum exponent over all terms.
Monomial monomial_content(const MultiPoly& p);

/// Quotient when q divides p exactly; throws DomainError otherwise.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);
inline MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& q) { return exact_divide(p, q); }

/// Scaled so the grlex-leading coefficient is 1 (zero stays zero).
MultiPoly normalize(const MultiPoly& p);

/// Normalized greatest common divisor; gcd(p, 0) = normalize(p).
MultiPoly gcd_multi(const MultiPoly& p, const MultiPoly& q);
MultiPoly gcd_multi(const std::vector<MultiPoly>& polys);

/// Names x1..xn by default.
std::vector<std::string> default_variable_names(std::size_t nvars);
/// W, x1..x(n-1): homogenizer first.
std::vector<std::string> projective_variable_names(std::size_t nvars);
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names);
std::string to_string(const MultiPoly& p);

// gtest and stream support.
inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace algdyn

namespace Eigen {
template <>
struct NumTraits<algdyn::MultiPoly> : GenericNumTraits<algdyn::MultiPoly> {
  using Real = algdyn::MultiPoly;
  using NonInteger = algdyn::MultiPoly;
  using Nested = algdyn::MultiPoly;
  using Literal = algdyn::MultiPoly;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 1000
  };
};
}  // namespace Eigen

#endif  // ALGDYN_MULTIPOLY_HPP
