#include "algdyn/matrix.hpp"

namespace algdyn {

std::vector<std::vector<int>> index_subsets(int d, int i) {
  std::vector<std::vector<int>> out;
  if (i < 0 || i > d) return out;
  std::vector<int> current(static_cast<std::size_t>(i));
  for (int k = 0; k < i; ++k) current[k] = k;
  while (true) {
    out.push_back(current);
    int k = i - 1;
    while (k >= 0 && current[k] == d - i + k) --k;
    if (k < 0) break;
    ++current[k];
    for (int j = k + 1; j < i; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

Echelon row_echelon(const RatMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  // Clear denominators row by row so the forward pass runs over Z.
  IntMatrix work(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    Integer scale(1);
    for (Eigen::Index c = 0; c < cols; ++c) scale = mp::lcm(scale, denominator(m(r, c)));
    for (Eigen::Index c = 0; c < cols; ++c) work(r, c) = numerator(m(r, c) * scale);
  }
  Echelon result;
  Eigen::Index pivot_row = 0;
  Integer prev(1);
  for (Eigen::Index c = 0; c < cols && pivot_row < rows; ++c) {
    Eigen::Index found = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r) {
      if (work(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) work.row(found).swap(work.row(pivot_row));
    for (Eigen::Index r = pivot_row + 1; r < rows; ++r) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        work(r, j) = (work(r, j) * work(pivot_row, c) - work(r, c) * work(pivot_row, j)) / prev;
      }
      work(r, c) = 0;
    }
    prev = work(pivot_row, c);
    result.pivot_columns.push_back(c);
    ++pivot_row;
  }
  // Back substitution over Q to reach reduced form.
  RatMatrix red = work.cast<Rational>();
  for (Eigen::Index k = static_cast<Eigen::Index>(result.pivot_columns.size()) - 1; k >= 0; --k) {
    const Eigen::Index c = result.pivot_columns[k];
    const Rational p = red(k, c);
    red.row(k) /= p;
    for (Eigen::Index r = 0; r < k; ++r) {
      const Rational f = red(r, c);
      if (f != 0) red.row(r) -= f * red.row(k);
    }
  }
  for (Eigen::Index r = result.rank(); r < rows; ++r) red.row(r).setConstant(Rational(0));
  result.reduced = std::move(red);
  return result;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v = RatVector::Constant(m.cols(), Rational(0));
    v(f) = 1;
    for (Eigen::Index k = 0; k < e.rank(); ++k) v(e.pivot_columns[k]) = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const Echelon e = row_echelon(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  RatVector x = RatVector::Constant(m.cols(), Rational(0));
  for (Eigen::Index k = 0; k < e.rank(); ++k) x(e.pivot_columns[k]) = e.reduced(k, m.cols());
  return x;
}

Eigen::Index rank(const RatMatrix& m) { return row_echelon(m).rank(); }

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_matrix<Rational>(n);
  const Echelon e = row_echelon(aug);
  if (e.rank() < n || e.pivot_columns[n - 1] != n - 1) throw DomainError("singular matrix");
  return e.reduced.rightCols(n);
}

}  // namespace algdyn
