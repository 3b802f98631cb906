#ifndef ALGDYN_UNIPOLY_HPP
#define ALGDYN_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "algdyn/number.hpp"

namespace algdyn {

/// Dense univariate polynomial over Q. Coefficients are stored in ascending
/// degree; trailing zeros are never kept, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);
  UniPoly(std::initializer_list<Rational> ascending)
      : UniPoly(std::vector<Rational>(ascending)) {}

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// The indeterminate T.
  static UniPoly identity();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  Rational leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  Rational operator()(const Rational& t) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned n);
UniPoly derivative(const UniPoly& p);
/// Quotient and remainder; throws DomainError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Scaled to leading coefficient 1; zero stays zero.
UniPoly monic(const UniPoly& p);
/// Monic gcd, gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p(q(T)).
UniPoly compose(const UniPoly& p, const UniPoly& q);

/// Number of distinct complex roots: deg P - deg gcd(P, P').
std::size_t squarefree_degree(const UniPoly& p);

/// Yun decomposition: factors[i] is the monic squarefree product of the
/// roots of multiplicity i+1 (possibly constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Rendering such as "T^3 - 3/2*T + 1".
std::string to_string(const UniPoly& p, const std::string& var = "T");

}  // namespace algdyn

#endif  // ALGDYN_UNIPOLY_HPP
