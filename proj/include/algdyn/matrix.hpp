#ifndef ALGDYN_MATRIX_HPP
#define ALGDYN_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "algdyn/number.hpp"
#include "algdyn/unipoly.hpp"

namespace algdyn {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Exact division in an integral domain; specialised by ring types that
/// are not fields (multivariate polynomials provide their own overload).
inline Integer exact_quotient(const Integer& a, const Integer& b) { return a / b; }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

/// i-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int d, int i);

/// Bareiss fraction-free determinant. Works over any integral domain for
/// which exact_quotient(Scalar, Scalar) is defined.
template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (!(m(r, k) == Scalar(0))) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <class Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index d) {
  Matrix<Scalar> id = Matrix<Scalar>::Constant(d, d, Scalar(0));
  for (Eigen::Index i = 0; i < d; ++i) id(i, i) = Scalar(1);
  return id;
}

/// Exact M^n by repeated squaring; M^0 is the identity.
template <class Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& m, unsigned n) {
  if (m.rows() != m.cols()) throw DomainError("matrix_power of a non-square matrix");
  Matrix<Scalar> result = identity_matrix<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (n > 0) {
    if (n & 1u) result = (result * base).eval();
    n >>= 1;
    if (n > 0) base = (base * base).eval();
  }
  return result;
}

/// i-th exterior power: entry (I, J) is the minor on rows I, columns J with
/// index sets in lexicographic order.
template <class Scalar>
Matrix<Scalar> exterior_power(const Matrix<Scalar>& m, int i) {
  if (m.rows() != m.cols()) throw DomainError("exterior_power of a non-square matrix");
  const int d = static_cast<int>(m.rows());
  if (i < 0 || i > d) throw DomainError("exterior_power degree outside [0, d]");
  const auto subsets = index_subsets(d, i);
  const auto n = static_cast<Eigen::Index>(subsets.size());
  Matrix<Scalar> out(n, n);
  Matrix<Scalar> minor(i, i);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (int a = 0; a < i; ++a)
        for (int b = 0; b < i; ++b) minor(a, b) = m(subsets[r][a], subsets[c][b]);
      out(r, c) = determinant<Scalar>(minor);
    }
  }
  return out;
}

/// Max-absolute-entry norm; 0 for an empty matrix.
template <class Scalar>
Rational norm_max(const Matrix<Scalar>& m) {
  Rational best(0);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) best = std::max(best, Rational(abs(m(r, c))));
  return best;
}

/// diag(A; copies): block-diagonal matrix with `copies` blocks equal to A.
template <class Scalar>
Matrix<Scalar> block_diagonal(const Matrix<Scalar>& a, int copies) {
  const Eigen::Index d = a.rows();
  Matrix<Scalar> out = Matrix<Scalar>::Constant(d * copies, a.cols() * copies, Scalar(0));
  for (int b = 0; b < copies; ++b) out.block(b * d, b * a.cols(), d, a.cols()) = a;
  return out;
}

/// det(T*I - M) by the division-free Berkowitz recurrence.
template <class Scalar>
UniPoly char_poly(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("char_poly of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return UniPoly::constant(Rational(1));
  // Coefficients in descending degree order.
  std::vector<Scalar> vect{Scalar(1), Scalar(-m(0, 0))};
  for (Eigen::Index r = 1; r < n; ++r) {
    const Matrix<Scalar> leading = m.topLeftCorner(r, r);
    const Matrix<Scalar> row = m.block(r, 0, 1, r);
    Matrix<Scalar> col = m.block(0, r, r, 1);
    std::vector<Scalar> toeplitz(static_cast<std::size_t>(r + 2));
    toeplitz[0] = Scalar(1);
    toeplitz[1] = -m(r, r);
    for (Eigen::Index k = 2; k <= r + 1; ++k) {
      toeplitz[k] = -(row * col)(0, 0);
      col = (leading * col).eval();
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r + 2), Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < vect.size() && j <= i; ++j) next[i] += toeplitz[i - j] * vect[j];
    vect = std::move(next);
  }
  std::vector<Rational> asc(vect.size());
  for (std::size_t i = 0; i < vect.size(); ++i) asc[vect.size() - 1 - i] = Rational(vect[i]);
  return UniPoly(std::move(asc));
}

/// Reduced row echelon form over Q with first-nonzero pivoting in column
/// order. Rows are first scaled to integers and eliminated fraction-free.
struct Echelon {
  RatMatrix reduced;
  std::vector<Eigen::Index> pivot_columns;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};
Echelon row_echelon(const RatMatrix& m);

/// Basis of the right kernel, one vector per free column; empty when M is
/// injective.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some solution of M x = b, or nullopt when inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

Eigen::Index rank(const RatMatrix& m);

/// Exact inverse; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

template <class Scalar>
RatMatrix to_rational(const Matrix<Scalar>& m) {
  return m.template cast<Rational>();
}

}  // namespace algdyn

#endif  // ALGDYN_MATRIX_HPP
