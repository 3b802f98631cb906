#ifndef ALGDYN_ALGEBRA_HPP
#define ALGDYN_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algdyn/matrix.hpp"
#include "algdyn/rational_map.hpp"
#include "algdyn/unipoly.hpp"

namespace algdyn {

/// Finite-dimensional algebra over Q given by structure constants
/// e_i * e_j = sum_k a_ij^k e_k. `table(k)(i, j)` holds a_ij^k.
class Algebra {
 public:
  Algebra(std::vector<std::string> names, std::vector<RatMatrix> table);
  /// Zero multiplication with default basis names e1..ed.
  explicit Algebra(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const RatMatrix& table(std::size_t k) const { return table_[k]; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[k](i, j); }
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  /// Dimensions of the factors when the algebra was built as a product;
  /// a single block otherwise.
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  void set_blocks(std::vector<std::size_t> blocks);

  /// Q[t]/(P) with basis 1, t, ..., t^{deg P - 1}.
  static Algebra quotient(const UniPoly& modulus, const std::string& var = "t");
  /// Q^n with coordinatewise product.
  static Algebra split(std::size_t n);
  /// n x n matrices, basis E_ij in row-major order.
  static Algebra matrices(std::size_t n);
  static Algebra product(const Algebra& a, const Algebra& b);
  /// Structure constants transported through an invertible change of basis
  /// M, so that M is an isomorphism from this algebra onto the result.
  Algebra transported(const RatMatrix& m) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<RatMatrix> table_;
  std::vector<std::size_t> blocks_;
};

/// Bilinear product of coordinate vectors over any scalar ring that can be
/// scaled by Rational (Rational, MultiPoly, RatFunc).
template <class Scalar>
std::vector<Scalar> multiply_coords(const Algebra& v, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  const std::size_t d = v.dim();
  std::vector<Scalar> out(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == Scalar(0)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == Scalar(0)) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& a = v.constant(i, j, k);
        if (a != 0) out[k] += xy * a;
      }
    }
  }
  return out;
}

/// Element of a specific algebra.
class AlgElement {
 public:
  AlgElement(const Algebra& parent, RatVector coords);
  static AlgElement zero(const Algebra& parent);
  static AlgElement basis(const Algebra& parent, std::size_t i);

  const Algebra& parent() const { return *parent_; }
  const RatVector& coords() const { return coords_; }
  std::vector<Rational> coord_list() const;
  bool is_zero() const;

  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator*(const Rational& c, const AlgElement& a);
  friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.coords_ == b.coords_; }

 private:
  const Algebra* parent_;
  RatVector coords_;
};

/// Throws DomainError when parents differ.
AlgElement multiply(const AlgElement& a, const AlgElement& b);
/// x^n with x^0 the unit (throws if there is none and n = 0).
AlgElement power(const AlgElement& x, unsigned n);

struct AlgebraFlags {
  bool unitary = false;
  bool commutative = false;
  bool associative = false;
  bool alternative = false;
  bool power_associative = false;
  bool abelian = false;
  bool jordan = false;
  friend bool operator==(const AlgebraFlags&, const AlgebraFlags&) = default;
};

AlgebraFlags predicates(const Algebra& v);
bool is_commutative(const Algebra& v);
bool is_associative(const Algebra& v);
bool is_alternative(const Algebra& v);
bool is_power_associative(const Algebra& v);

std::optional<AlgElement> find_unit(const Algebra& v);

/// f_V(u) = u and df_V(u) = 2 id for the unit u.
bool unit_fixed_point_check(const Algebra& v);

/// Matrix of y -> x*y.
RatMatrix left_mult_matrix(const AlgElement& x);

struct Nilradical {
  std::vector<AlgElement> basis;
  std::size_t reduced_dim = 0;  ///< m = dim V - dim N(V)
};
Nilradical nilradical_and_m(const Algebra& v);

/// True when L_x^d = 0.
bool is_nilpotent(const AlgElement& x);

UniPoly element_min_poly(const AlgElement& x);

struct GenericInvariants {
  std::size_t delta = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};
/// Samples `samples` elements with integer coordinates in [-10, 10].
GenericInvariants generic_invariants(const Algebra& v, std::uint64_t seed, std::size_t samples = 16);

/// z -> z*z in coordinates; requires commutativity.
AffineRationalMap squaring_map(const Algebra& v);

/// Commutative algebra whose product polarizes a homogeneous quadratic map.
Algebra algebra_from_quadratic(const AffineRationalMap& f);

/// Checks M(x*y) = (Mx)*(My) on all basis pairs.
bool check_isomorphism_witness(const Algebra& v, const Algebra& w, const RatMatrix& m);

enum class Dim2Type { nilpotent_type, split_type };
Dim2Type classify_dim2(const Algebra& v);
std::string to_string(Dim2Type t);

struct AlgebraProfile {
  AlgebraFlags flags;
  std::optional<AlgElement> unit;
  std::vector<AlgElement> nilradical_basis;
  std::optional<std::size_t> reduced_dim;
  std::optional<std::size_t> generic_delta;
  std::optional<std::size_t> generic_k;
  std::optional<Dim2Type> dim2;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};
AlgebraProfile analyze(const Algebra& v, std::uint64_t seed, std::size_t samples = 16);

}  // namespace algdyn

#endif  // ALGDYN_ALGEBRA_HPP
