#ifndef ALGDYN_TESTS_TEST_UTIL_HPP
#define ALGDYN_TESTS_TEST_UTIL_HPP

#include <random>

#include "algdyn/matrix.hpp"
#include "algdyn/multipoly.hpp"
#include "algdyn/unipoly.hpp"

namespace algdyn::testing {

inline IntMatrix random_int_matrix(std::mt19937_64& rng, int d, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = dist(rng);
  return m;
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

inline IntMatrix random_unimodular_free(std::mt19937_64& rng, int d, int lo = -3, int hi = 3) {
  for (;;) {
    IntMatrix m = random_int_matrix(rng, d, lo, hi);
    if (determinant<Integer>(m) != 0) return m;
  }
}

/// Random monic polynomial of the given degree with small integer coefficients.
inline UniPoly random_monic(std::mt19937_64& rng, int degree, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(dist(rng));
  c.emplace_back(1);
  return UniPoly(std::move(c));
}

inline MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
inline MultiPoly cst(std::size_t n, long c) { return MultiPoly(n, Rational(c)); }

}  // namespace algdyn::testing

#endif  // ALGDYN_TESTS_TEST_UTIL_HPP
