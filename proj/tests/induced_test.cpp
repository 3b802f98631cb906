#include <gtest/gtest.h>

#include <random>

#include "algdyn/induced.hpp"
#include "test_util.hpp"

using namespace algdyn;
using algdyn::testing::int_matrix;
using algdyn::testing::random_int_matrix;
using algdyn::testing::var;

namespace {

Algebra truncated(int m) {
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
  c.back() = 1;
  return Algebra::quotient(UniPoly(c));
}

UniRationalFunction ratfn(std::initializer_list<Rational> num, std::initializer_list<Rational> den = {1}) {
  return {UniPoly(num), UniPoly(den)};
}

AlgElement elem(const Algebra& v, std::initializer_list<Rational> c) {
  RatVector x(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (const auto& a : c) x(i++) = a;
  return AlgElement(v, x);
}

std::vector<RatFunc> symbolic(std::size_t n) {
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(var(n, i));
  return out;
}

// Evaluates a univariate polynomial at an algebra element with RatFunc coordinates.
std::vector<RatFunc> poly_at(const Algebra& v, const UniPoly& p, const std::vector<RatFunc>& x) {
  const std::size_t n = x.front().nvars();
  std::vector<RatFunc> unit;
  for (const auto& c : find_unit(v)->coord_list()) unit.emplace_back(MultiPoly(n, c));
  std::vector<RatFunc> acc(v.dim(), RatFunc(MultiPoly(n)));
  for (int i = p.degree(); i >= 0; --i) {
    acc = multiply_coords(v, acc, x);
    for (std::size_t k = 0; k < acc.size(); ++k)
      acc[k] = acc[k] + unit[k] * RatFunc(MultiPoly(n, p.coefficient(static_cast<std::size_t>(i))));
  }
  return acc;
}

}  // namespace

TEST(UniRationalFunction, ReducesAndComposes) {
  const UniRationalFunction f = ratfn({-1, 0, 1}, {-1, 1});  // (T^2-1)/(T-1)
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), UniPoly({1, 1}));
  const UniRationalFunction phi = ratfn({1, 0, 1}, {-2, 1});
  EXPECT_EQ(phi.degree(), 2);
  EXPECT_EQ(iterate(phi, 2).degree(), 4);
  EXPECT_EQ(compose(ratfn({0, 0, 1}), ratfn({1, 1})).num(), UniPoly({1, 2, 1}));
  EXPECT_THROW(UniRationalFunction(UniPoly{1}, UniPoly{}), DomainError);
  EXPECT_EQ(to_string(ratfn({1}, {0, 1})), "(1)/(t)");
}

TEST(InduceUnivariate, Examples) {
  const AffineRationalMap q = induce_univariate(Algebra::split(1), ratfn({1, 0, 1}, {-2, 1}));
  EXPECT_EQ(q[0], RatFunc(var(1, 0) * var(1, 0) + MultiPoly(1, Rational(1)), var(1, 0) - MultiPoly(1, Rational(2))));
  const AffineRationalMap sq = induce_univariate(truncated(2), ratfn({0, 0, 1}));
  EXPECT_EQ(sq[0], RatFunc(var(2, 0) * var(2, 0)));
  EXPECT_EQ(sq[1], RatFunc(var(2, 0) * var(2, 1) * Rational(2)));
  const AffineRationalMap inv = induce_univariate(truncated(2), ratfn({1}, {0, 1}));
  EXPECT_EQ(inv[0], RatFunc(MultiPoly(2, Rational(1)), var(2, 0)));
  EXPECT_EQ(inv[1], RatFunc(-var(2, 1), var(2, 0) * var(2, 0)));
}

TEST(InduceUnivariate, Errors) {
  EXPECT_THROW(induce_univariate(Algebra(2), ratfn({0, 1})), DomainError);
}

TEST(InduceUnivariate, MatchesSquaringMap) {
  for (const Algebra& v : {truncated(3), Algebra::split(3), Algebra::quotient(UniPoly({1, 0, 1}))})
    EXPECT_EQ(induce_univariate(v, ratfn({0, 0, 1})), squaring_map(v));
}

TEST(InduceUnivariate, MultiplyBack) {
  // P(v) * f(v) = Q(v) on random phi and small algebras.
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra v = trial % 2 ? truncated(2) : Algebra::quotient(UniPoly({Rational(c(rng)), Rational(c(rng)), 1}));
    UniPoly num({Rational(c(rng)), Rational(c(rng)), Rational(c(rng))});
    UniPoly den({Rational(c(rng)), 1});
    const UniRationalFunction phi(num, den);
    const AffineRationalMap f = induce_univariate(v, phi);
    const auto x = symbolic(v.dim());
    const auto lhs = multiply_coords(v, poly_at(v, phi.den(), x), f.coords());
    const auto rhs = poly_at(v, phi.num(), x);
    for (std::size_t k = 0; k < v.dim(); ++k) ASSERT_EQ(lhs[k], rhs[k]);
  }
}

TEST(InduceUnivariate, SeriesInversionOracle) {
  // In Q[t]/(t^m), 1/(l0 + n) = sum_j (-1)^j n^j / l0^{j+1} with n = l1 t + l2 t^2 + ...
  for (int m = 2; m <= 4; ++m) {
    const Algebra v = truncated(m);
    const std::size_t d = v.dim();
    const auto x = symbolic(d);
    std::vector<RatFunc> nil = x;
    nil[0] = RatFunc(MultiPoly(d));
    std::vector<RatFunc> term(d, RatFunc(MultiPoly(d)));
    term[0] = RatFunc(MultiPoly(d, Rational(1)), var(d, 0));
    std::vector<RatFunc> sum = term;
    for (int j = 1; j < m; ++j) {
      term = multiply_coords(v, term, nil);
      for (auto& c : term) c = -c / x[0];
      for (std::size_t k = 0; k < d; ++k) sum[k] = sum[k] + term[k];
    }
    EXPECT_EQ(induce_univariate(v, ratfn({1}, {0, 1})).coords(), sum) << "m=" << m;
  }
}

TEST(InduceUnivariate, IterateCompatibility) {
  const std::vector<UniRationalFunction> phis = {ratfn({1, 0, 1}, {-2, 1}), ratfn({0, 0, 1}), ratfn({1}, {1, 0, 1}),
                                                 ratfn({-1, 0, 1})};
  for (const Algebra& v : {Algebra::split(1), truncated(2), Algebra::split(2), Algebra::quotient(UniPoly({1, 0, 1}))})
    for (const auto& phi : phis) {
      const AffineRationalMap f = induce_univariate(v, phi);
      AffineRationalMap fn = f;
      for (unsigned n = 1; n <= 3; ++n) {
        if (n > 1) fn = compose(f, fn);
        const AffineRationalMap direct = induce_univariate(v, iterate(phi, n));
        ASSERT_EQ(map_degree(fn), map_degree(direct));
        ASSERT_EQ(fn, direct);
      }
    }
}

TEST(CoefficientStructure, Examples) {
  EXPECT_TRUE(coefficient_structure_check(truncated(2), UniPoly({0, 0, 1})));
  EXPECT_TRUE(coefficient_structure_check(truncated(3), UniPoly({0, 0, 1})));
  EXPECT_TRUE(coefficient_structure_check(truncated(2), UniPoly({0, 1})));
  EXPECT_TRUE(coefficient_structure_check(truncated(4), UniPoly({3, -1, 0, 2})));
  EXPECT_THROW(coefficient_structure_check(Algebra::split(2), UniPoly({0, 0, 1})), DomainError);
}

TEST(InduceMonomial, Examples) {
  const AffineRationalMap cls = induce_monomial(int_matrix({{1, 1}, {1, 0}}), Algebra::split(1));
  EXPECT_EQ(cls[0], RatFunc(var(2, 0) * var(2, 1)));
  EXPECT_EQ(cls[1], RatFunc(var(2, 0)));
  EXPECT_EQ(induce_monomial(int_matrix({{1}}), truncated(3)), AffineRationalMap::identity(3));
  EXPECT_EQ(induce_monomial(int_matrix({{2}}), truncated(2)), squaring_map(truncated(2)));
  const AffineRationalMap neg = induce_monomial(int_matrix({{0, -1}, {1, 0}}), Algebra::split(1));
  EXPECT_EQ(neg[0], RatFunc(MultiPoly(2, Rational(1)), var(2, 1)));
}

TEST(InduceMonomial, Errors) {
  EXPECT_THROW(induce_monomial(int_matrix({{1, 1}, {1, 1}}), truncated(2)), DomainError);
  EXPECT_THROW(induce_monomial(int_matrix({{1}}), Algebra::matrices(2)), DomainError);
}

TEST(InduceMonomial, CompositionIsMatrixProduct) {
  std::mt19937_64 rng(22);
  int checked = 0;
  while (checked < 12) {
    const IntMatrix a = random_int_matrix(rng, 2, -1, 2);
    const IntMatrix b = random_int_matrix(rng, 2, -1, 2);
    if (determinant<Integer>(a) == 0 || determinant<Integer>(b) == 0) continue;
    const Algebra v = checked % 3 == 0 ? truncated(2) : Algebra::split(1);
    const IntMatrix ab = a * b;
    ASSERT_EQ(compose(induce_monomial(a, v), induce_monomial(b, v)), induce_monomial(ab, v));
    ++checked;
  }
}

TEST(ExpLog, Examples) {
  const Algebra t3 = truncated(3);
  EXPECT_EQ(exp_element(AlgElement::zero(t3)), *find_unit(t3));
  EXPECT_EQ(exp_element(elem(t3, {0, 1, 0})), elem(t3, {1, 1, Rational(1, 2)}));
  EXPECT_EQ(log_element(exp_element(elem(t3, {0, 1, 0}))), elem(t3, {0, 1, 0}));
  EXPECT_THROW(exp_element(elem(t3, {1, 0, 0})), DomainError);
  EXPECT_THROW(log_element(elem(t3, {2, 1, 0})), DomainError);
}

TEST(ExpLog, Identities) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Algebra v = trial % 2 ? truncated(4) : Algebra::product(truncated(2), truncated(3));
    const Nilradical n = nilradical_and_m(v);
    AlgElement h1 = AlgElement::zero(v);
    AlgElement h2 = AlgElement::zero(v);
    for (const auto& b : n.basis) {
      h1 = h1 + Rational(c(rng)) * b;
      h2 = h2 + Rational(c(rng)) * b;
    }
    ASSERT_EQ(log_element(exp_element(h1)), h1);
    ASSERT_EQ(exp_element(h1 + h2), multiply(exp_element(h1), exp_element(h2)));
  }
}

TEST(Conjugacy, LocalPresentation) {
  EXPECT_EQ(local_presentation(truncated(3)).size(), 1u);
  const auto prod = local_presentation(Algebra::product(truncated(2), Algebra::split(1)));
  ASSERT_EQ(prod.size(), 2u);
  EXPECT_EQ(prod[0].maximal_ideal.size(), 1u);
  EXPECT_TRUE(prod[1].maximal_ideal.empty());
  EXPECT_EQ(local_presentation(Algebra::split(2)).size(), 2u);
  EXPECT_THROW(local_presentation(Algebra::quotient(UniPoly({0, -1, 1}))), DomainError);
  EXPECT_THROW(local_presentation(Algebra::matrices(2)), DomainError);
}

TEST(Conjugacy, Examples) {
  EXPECT_TRUE(conjugacy_check_local(truncated(2), int_matrix({{2}})));
  EXPECT_TRUE(conjugacy_check_local(truncated(3), int_matrix({{1, 0}, {0, 1}})));
  EXPECT_TRUE(conjugacy_check_local(truncated(3), int_matrix({{1, 1}, {1, 0}})));
  EXPECT_THROW(conjugacy_check_local(Algebra::quotient(UniPoly({0, -1, 1})), int_matrix({{2}})), DomainError);
  EXPECT_TRUE(conjugacy_check_local(Algebra::split(2), int_matrix({{2}})));
}

TEST(Conjugacy, ProductsAndNegativeExponents) {
  const Algebra v = Algebra::product(truncated(2), Algebra::split(1));
  EXPECT_TRUE(conjugacy_check_local(v, int_matrix({{2, 1}, {1, 1}})));
  EXPECT_TRUE(conjugacy_check_local(truncated(2), int_matrix({{1, -1}, {1, 0}})));
}
