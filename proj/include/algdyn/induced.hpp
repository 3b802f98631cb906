#ifndef ALGDYN_INDUCED_HPP
#define ALGDYN_INDUCED_HPP

#include <string>
#include <vector>

#include "algdyn/algebra.hpp"
#include "algdyn/matrix.hpp"
#include "algdyn/rational_map.hpp"
#include "algdyn/unipoly.hpp"

namespace algdyn {

/// phi = Q / P in lowest terms with P monic.
class UniRationalFunction {
 public:
  UniRationalFunction() : UniRationalFunction(UniPoly{}, UniPoly{1}) {}
  explicit UniRationalFunction(UniPoly num) : UniRationalFunction(std::move(num), UniPoly{1}) {}
  UniRationalFunction(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  /// max(deg Q, deg P).
  int degree() const;
  bool is_polynomial() const { return den_.degree() == 0; }

  friend UniRationalFunction operator+(const UniRationalFunction& a, const UniRationalFunction& b);
  friend UniRationalFunction operator-(const UniRationalFunction& a, const UniRationalFunction& b);
  friend UniRationalFunction operator*(const UniRationalFunction& a, const UniRationalFunction& b);
  friend UniRationalFunction operator/(const UniRationalFunction& a, const UniRationalFunction& b);
  friend bool operator==(const UniRationalFunction&, const UniRationalFunction&) = default;

 private:
  UniPoly num_;
  UniPoly den_;
};

/// outer(inner(T)).
UniRationalFunction compose(const UniRationalFunction& outer, const UniRationalFunction& inner);
/// n-fold self-composition, n >= 1.
UniRationalFunction iterate(const UniRationalFunction& phi, unsigned n);
std::string to_string(const UniRationalFunction& phi, const std::string& var = "t");

/// Coordinates of P(v)^{-1} Q(v) for v = sum lambda_i e_i with indeterminate
/// lambda_0..lambda_{d-1} (printed x1..xd).
AffineRationalMap induce_univariate(const Algebra& v, const UniRationalFunction& phi);

/// For V = Q[t]/(t^m): each coordinate j >= 1 of the map induced by P is
/// affine in lambda_j with slope P'(lambda_0).
bool coefficient_structure_check(const Algebra& v, const UniPoly& p);

/// Generalized monomial map F_A on V^d. Variables are grouped per factor:
/// copy j owns indices j*dim(V) .. (j+1)*dim(V)-1.
AffineRationalMap induce_monomial(const IntMatrix& a, const Algebra& v);

AlgElement exp_element(const AlgElement& h);
AlgElement log_element(const AlgElement& u);

/// Explicit local-factor presentation V = prod (Q e_b + m_b).
struct LocalFactor {
  AlgElement idempotent;
  std::vector<AlgElement> maximal_ideal;
};
/// Derives the presentation for a local abelian algebra or a product of
/// local ones; throws DomainError for other shapes.
std::vector<LocalFactor> local_presentation(const Algebra& v);

/// The conjugacy Phi: ((a_b), (h_b)) -> sum_b a_b exp(h_b) on each copy,
/// as a polynomial map on d*dim(V) variables.
AffineRationalMap exp_conjugacy(const Algebra& v, std::size_t copies);
/// (f_A, T_A): classical monomial map on the a-coordinates of each factor
/// and A acting linearly on the h-coordinates.
AffineRationalMap monomial_linear_product(const Algebra& v, const IntMatrix& a);

/// Exact check of F_A o Phi = Phi o (f_A, T_A).
bool conjugacy_check_local(const Algebra& v, const IntMatrix& a);

}  // namespace algdyn

#endif  // ALGDYN_INDUCED_HPP
