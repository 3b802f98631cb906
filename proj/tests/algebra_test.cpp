#include <gtest/gtest.h>

#include <random>

#include "algdyn/algebra.hpp"
#include "test_util.hpp"

using namespace algdyn;
using algdyn::testing::int_matrix;
using algdyn::testing::random_monic;
using algdyn::testing::random_unimodular_free;
using algdyn::testing::var;

namespace {

Algebra truncated(int m) {
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
  c.back() = 1;
  return Algebra::quotient(UniPoly(c));
}

AlgElement elem(const Algebra& v, std::initializer_list<long> c) {
  RatVector x(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (long a : c) x(i++) = a;
  return AlgElement(v, x);
}

// e1 e1 = e2, e2 e2 = e1.
Algebra swap_squares() {
  Algebra v(2);
  v.set_constant(0, 0, 1, 1);
  v.set_constant(1, 1, 0, 1);
  return v;
}

RatMatrix rat(const IntMatrix& m) { return to_rational(m); }

AlgElement poly_at(const UniPoly& p, const AlgElement& x) {
  AlgElement acc = AlgElement::zero(x.parent());
  const AlgElement one = *find_unit(x.parent());
  for (int i = p.degree(); i >= 0; --i) acc = multiply(acc, x) + p.coefficient(static_cast<std::size_t>(i)) * one;
  return acc;
}

}  // namespace

TEST(Multiply, Examples) {
  const Algebra a = truncated(2);
  EXPECT_TRUE(multiply(elem(a, {0, 1}), elem(a, {0, 1})).is_zero());
  const Algebra s = Algebra::split(2);
  EXPECT_TRUE(multiply(elem(s, {1, 0}), elem(s, {0, 1})).is_zero());
  const Algebra m = Algebra::matrices(2);
  const AlgElement x = elem(m, {1, -2, 3, 5});
  EXPECT_EQ(multiply(*find_unit(m), x), x);
  EXPECT_THROW(multiply(elem(a, {1, 0}), elem(s, {1, 0})), DomainError);
}

TEST(Predicates, Examples) {
  const AlgebraFlags t3 = predicates(truncated(3));
  EXPECT_TRUE(t3.unitary && t3.commutative && t3.associative && t3.alternative && t3.power_associative && t3.abelian);
  const AlgebraFlags mat = predicates(Algebra::matrices(2));
  EXPECT_TRUE(mat.associative);
  EXPECT_FALSE(mat.commutative);
  EXPECT_TRUE(mat.alternative);
  const AlgebraFlags sw = predicates(swap_squares());
  EXPECT_TRUE(sw.commutative);
  EXPECT_FALSE(sw.associative);
  EXPECT_FALSE(sw.abelian);
}

TEST(Predicates, JordanIsCommutativeAndAlternative) {
  EXPECT_TRUE(predicates(truncated(2)).jordan);
  EXPECT_FALSE(predicates(Algebra::matrices(2)).jordan);
}

TEST(FindUnit, Examples) {
  EXPECT_EQ(find_unit(truncated(2))->coord_list(), (std::vector<Rational>{1, 0}));
  EXPECT_FALSE(find_unit(Algebra(3)).has_value());
  EXPECT_EQ(find_unit(Algebra::matrices(2))->coord_list(), (std::vector<Rational>{1, 0, 0, 1}));
}

TEST(UnitFixedPoint, Examples) {
  EXPECT_TRUE(unit_fixed_point_check(Algebra::split(2)));
  EXPECT_TRUE(unit_fixed_point_check(truncated(3)));
  EXPECT_THROW(unit_fixed_point_check(Algebra(2)), DomainError);
}

TEST(LeftMult, Examples) {
  const Algebra a = truncated(2);
  EXPECT_EQ(left_mult_matrix(*find_unit(a)), RatMatrix::Identity(2, 2));
  RatMatrix t(2, 2);
  t << 0, 0, 1, 0;
  EXPECT_EQ(left_mult_matrix(elem(a, {0, 1})), t);
  EXPECT_EQ(left_mult_matrix(AlgElement::zero(a)), RatMatrix::Zero(2, 2));
}

TEST(Nilradical, Examples) {
  const Nilradical n2 = nilradical_and_m(truncated(2));
  ASSERT_EQ(n2.basis.size(), 1u);
  EXPECT_EQ(n2.reduced_dim, 1u);
  EXPECT_EQ(n2.basis[0].coords()(0), 0);
  EXPECT_EQ(nilradical_and_m(Algebra::split(2)).reduced_dim, 2u);
  EXPECT_TRUE(nilradical_and_m(Algebra::split(2)).basis.empty());
  const Nilradical n3 = nilradical_and_m(truncated(3));
  EXPECT_EQ(n3.basis.size(), 2u);
  EXPECT_EQ(n3.reduced_dim, 1u);
  for (const auto& x : n3.basis) EXPECT_EQ(x.coords()(0), 0);
  EXPECT_THROW(nilradical_and_m(Algebra::matrices(2)), DomainError);
}

TEST(MinPoly, Examples) {
  const Algebra t3 = truncated(3);
  EXPECT_EQ(element_min_poly(elem(t3, {0, 1, 0})), UniPoly({0, 0, 0, 1}));
  EXPECT_EQ(element_min_poly(elem(Algebra::split(2), {1, 0})), UniPoly({0, -1, 1}));
  EXPECT_EQ(element_min_poly(*find_unit(t3)), UniPoly({-1, 1}));
  EXPECT_THROW(element_min_poly(elem(Algebra(2), {1, 0})), DomainError);
}

TEST(GenericInvariants, Examples) {
  const GenericInvariants mat = generic_invariants(Algebra::matrices(2), 7);
  EXPECT_EQ(mat.delta, 2u);
  EXPECT_EQ(mat.k, 2u);
  EXPECT_EQ(mat.seed, 7u);
  EXPECT_EQ(mat.samples, 16u);
  const GenericInvariants t3 = generic_invariants(truncated(3), 1);
  EXPECT_EQ(t3.delta, 3u);
  EXPECT_EQ(t3.k, 1u);
  const GenericInvariants idem = generic_invariants(Algebra::quotient(UniPoly({0, -1, 1})), 3);
  EXPECT_EQ(idem.delta, 2u);
  EXPECT_EQ(idem.k, 2u);
}

TEST(GenericInvariants, SeedDeterminism) {
  const Algebra v = Algebra::product(truncated(2), Algebra::split(1));
  const auto a = generic_invariants(v, 99);
  const auto b = generic_invariants(v, 99);
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.k, b.k);
}

TEST(SquaringMap, Examples) {
  const AffineRationalMap f = squaring_map(truncated(2));
  EXPECT_EQ(f[0], RatFunc(var(2, 0) * var(2, 0)));
  EXPECT_EQ(f[1], RatFunc(var(2, 0) * var(2, 1) * Rational(2)));
  const AffineRationalMap s = squaring_map(Algebra::split(2));
  EXPECT_EQ(s[0], RatFunc(var(2, 0) * var(2, 0)));
  EXPECT_EQ(s[1], RatFunc(var(2, 1) * var(2, 1)));
  EXPECT_EQ(squaring_map(Algebra::split(1))[0], RatFunc(var(1, 0) * var(1, 0)));
  EXPECT_THROW(squaring_map(Algebra::matrices(2)), DomainError);
}

TEST(AlgebraFromQuadratic, Examples) {
  const Algebra q = algebra_from_quadratic(AffineRationalMap({RatFunc(var(1, 0) * var(1, 0))}));
  EXPECT_EQ(q.constant(0, 0, 0), 1);
  const Algebra t2 = algebra_from_quadratic(
      AffineRationalMap({RatFunc(var(2, 0) * var(2, 0)), RatFunc(var(2, 0) * var(2, 1) * Rational(2))}));
  const Algebra ref = truncated(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(t2.constant(i, j, k), ref.constant(i, j, k));
  EXPECT_THROW(algebra_from_quadratic(AffineRationalMap({RatFunc(var(1, 0))})), DomainError);
}

TEST(IsomorphismWitness, Examples) {
  const Algebra t2 = truncated(2);
  EXPECT_TRUE(check_isomorphism_witness(t2, t2, RatMatrix::Identity(2, 2)));
  // 1 -> (1,1), t -> (1,0)
  const Algebra idem = Algebra::quotient(UniPoly({0, -1, 1}));
  EXPECT_TRUE(check_isomorphism_witness(idem, Algebra::split(2), rat(int_matrix({{1, 1}, {1, 0}}))));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i)
    EXPECT_FALSE(check_isomorphism_witness(t2, Algebra::split(2), rat(random_unimodular_free(rng, 2))));
  EXPECT_THROW(check_isomorphism_witness(t2, t2, RatMatrix::Zero(2, 2)), DomainError);
}

TEST(ClassifyDim2, Examples) {
  EXPECT_EQ(classify_dim2(truncated(2)), Dim2Type::nilpotent_type);
  EXPECT_EQ(classify_dim2(Algebra::quotient(UniPoly({0, -1, 1}))), Dim2Type::split_type);
  EXPECT_EQ(classify_dim2(Algebra::quotient(UniPoly({1, 0, 1}))), Dim2Type::split_type);
  // (t - 3)^2 is still nilpotent type once the basis is recentred.
  EXPECT_EQ(classify_dim2(Algebra::quotient(UniPoly({9, -6, 1}))), Dim2Type::nilpotent_type);
  EXPECT_THROW(classify_dim2(truncated(3)), DomainError);
}

// Property suites.

TEST(AlgebraProperties, QuadraticRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 4;
    const Algebra v = Algebra::quotient(random_monic(rng, deg)).transported(rat(random_unimodular_free(rng, deg)));
    const Algebra back = algebra_from_quadratic(squaring_map(v));
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j)
        for (std::size_t k = 0; k < v.dim(); ++k) ASSERT_EQ(back.constant(i, j, k), v.constant(i, j, k));
  }
}

TEST(AlgebraProperties, TransportInvariance) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 4;
    const Algebra v = Algebra::quotient(random_monic(rng, deg, -2, 2));
    const RatMatrix m = rat(random_unimodular_free(rng, deg));
    const Algebra w = v.transported(m);
    ASSERT_TRUE(check_isomorphism_witness(v, w, m));
    ASSERT_EQ(predicates(v), predicates(w));
    ASSERT_EQ(nilradical_and_m(v).reduced_dim, nilradical_and_m(w).reduced_dim);
    const auto gv = generic_invariants(v, 5, 8);
    const auto gw = generic_invariants(w, 5, 8);
    ASSERT_EQ(gv.delta, gw.delta);
    ASSERT_EQ(gv.k, gw.k);
  }
  const Algebra mat = Algebra::matrices(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Algebra w = mat.transported(rat(random_unimodular_free(rng, 4, -2, 2)));
    EXPECT_EQ(predicates(w), predicates(mat));
    EXPECT_EQ(generic_invariants(w, 1).k, 2u);
  }
}

TEST(AlgebraProperties, NilradicalIsNilpotentIdeal) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 5;
    const Algebra v = Algebra::quotient(random_monic(rng, deg, -2, 2));
    const Nilradical n = nilradical_and_m(v);
    RatMatrix span(static_cast<Eigen::Index>(v.dim()), static_cast<Eigen::Index>(n.basis.size()));
    for (std::size_t c = 0; c < n.basis.size(); ++c) {
      ASSERT_TRUE(is_nilpotent(n.basis[c]));
      span.col(static_cast<Eigen::Index>(c)) = n.basis[c].coords();
    }
    for (const auto& x : n.basis)
      for (std::size_t i = 0; i < v.dim(); ++i) {
        const AlgElement y = multiply(AlgElement::basis(v, i), x);
        RatMatrix aug(span.rows(), span.cols() + 1);
        aug << span, y.coords();
        ASSERT_EQ(rank(aug), rank(span));
      }
  }
}

TEST(AlgebraProperties, ReducedDimMatchesSquarefreeDegree) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    // Products of small powers make repeated roots common.
    UniPoly p = pow(random_monic(rng, 1, -2, 2), 1 + trial % 3) * random_monic(rng, 1 + trial % 2, -2, 2);
    const Algebra v = Algebra::quotient(p);
    ASSERT_EQ(nilradical_and_m(v).reduced_dim, static_cast<std::size_t>(squarefree_degree(p))) << to_string(p);
  }
}

TEST(AlgebraProperties, UnitFixedPointOnCommutativeUnital) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 4;
    const Algebra v = Algebra::quotient(random_monic(rng, deg)).transported(rat(random_unimodular_free(rng, deg)));
    ASSERT_TRUE(unit_fixed_point_check(v));
    const AlgElement u = *find_unit(v);
    for (std::size_t i = 0; i < v.dim(); ++i) {
      const AlgElement e = AlgElement::basis(v, i);
      ASSERT_EQ(multiply(u, e), e);
      ASSERT_EQ(multiply(e, u), e);
    }
  }
}

TEST(AlgebraProperties, MinPolyAnnihilates) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const Algebra v = trial % 3 == 0 ? Algebra::matrices(2) : Algebra::quotient(random_monic(rng, 1 + trial % 4));
    RatVector c(static_cast<Eigen::Index>(v.dim()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coord(rng);
    const AlgElement x(v, c);
    const UniPoly p = element_min_poly(x);
    ASSERT_EQ(p.leading_coefficient(), 1);
    ASSERT_TRUE(poly_at(p, x).is_zero());
    ASSERT_LE(p.degree(), static_cast<int>(v.dim()));
  }
}
