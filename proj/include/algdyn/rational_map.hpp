#ifndef ALGDYN_RATIONAL_MAP_HPP
#define ALGDYN_RATIONAL_MAP_HPP

#include <string>
#include <vector>

#include "algdyn/multipoly.hpp"

namespace algdyn {

/// Quotient of multivariate polynomials, kept reduced: gcd(num, den) = 1 and
/// den scaled to grlex-leading coefficient 1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  /// Constant with no variables; mixes with any ring like MultiPoly(int).
  explicit RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const Rational& c) { return RatFunc(a.num_ * c, a.den_); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  MultiPoly num_;
  MultiPoly den_;
};

/// Substitutes values[i] for variable i. Throws IndeterminacyError when the
/// denominator becomes identically zero.
RatFunc substitute(const RatFunc& f, const std::vector<RatFunc>& values);
std::string to_string(const RatFunc& f, const std::vector<std::string>& names);

/// f: Q^D --> Q^D given by D rational coordinates in D variables x1..xD.
class AffineRationalMap {
 public:
  AffineRationalMap() = default;
  explicit AffineRationalMap(std::vector<RatFunc> coords);

  static AffineRationalMap identity(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<RatFunc>& coords() const { return coords_; }
  const RatFunc& operator[](std::size_t i) const { return coords_[i]; }
  friend bool operator==(const AffineRationalMap&, const AffineRationalMap&) = default;

 private:
  std::vector<RatFunc> coords_;
};

/// [F_0 : ... : F_D] with homogeneous components of one degree in the
/// variables (W, x1..xD), W = index 0, sharing no common factor.
struct ProjectiveMap {
  std::vector<MultiPoly> components;
  int degree = 0;
  friend bool operator==(const ProjectiveMap&, const ProjectiveMap&) = default;
};

/// Clears denominators with the homogenizing variable at index 0 and
/// divides out the common factor.
ProjectiveMap homogenize_reduce(const AffineRationalMap& m);

/// Divides homogeneous components by their gcd and records the degree.
/// Throws DegenerateMapError when all components vanish.
ProjectiveMap reduce_components(std::vector<MultiPoly> components);

/// first o second (substitute `second` into `first`).
AffineRationalMap compose(const AffineRationalMap& first, const AffineRationalMap& second);

/// F o G for projective maps, reduced.
ProjectiveMap compose(const ProjectiveMap& first, const ProjectiveMap& second);

/// Degree of the reduced homogeneous representation.
int map_degree(const AffineRationalMap& m);

/// Affine chart W = 1 of a projective map (first component is the denominator).
AffineRationalMap dehomogenize(const ProjectiveMap& m);

std::vector<std::string> to_strings(const AffineRationalMap& m);
std::vector<std::string> to_strings(const ProjectiveMap& m);

}  // namespace algdyn

#endif  // ALGDYN_RATIONAL_MAP_HPP
