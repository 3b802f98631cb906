// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algdyn/algebra.hpp"
#include "algdyn/degrees.hpp"
#include "algdyn/induced.hpp"
#include "algdyn/parse.hpp"
#include "test_util.hpp"

using namespace algdyn;
using algdyn::testing::random_int_matrix;
using algdyn::testing::random_monic;
using algdyn::testing::random_unimodular_free;
using algdyn::testing::var;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<Integer>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<Integer> powers_of(long base, std::size_t n) {
  std::vector<Integer> out;
  Integer v = 1;
  for (std::size_t i = 0; i < n; ++i) out.push_back(v *= base);
  return out;
}

IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

Integer int_norm(const IntMatrix& m) { return norm_max(m).convert_to<Integer>(); }

// Intersection form on P^1 x P^1 in the basis (H1, H2): H1^2 = H2^2 = 0, H1.H2 = 1.
long p1p1_intersect(long a, long b, long c, long d) { return a * d + b * c; }

Outcome criterion1() {
  const auto t0 = Clock::now();
  const Algebra v = parse_algebra("Q[t]/(t^2 - t)");
  const DegreeSequence bf = brute_force_degrees(induce_univariate(v, parse_ratfunc("t^2")), 5);
  const AsymptoticResult r = asymptotic_check(bf, theorem_a_predict(2, 2, 1, 5));
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << "deg_1 = " << join(bf.values) << ", verdict " << to_string(r.verdict) << ", ratio " << r.max_ratio << ", "
     << secs << " s";
  return {bf.values == powers_of(2, 5) && r.verdict == Verdict::pass && r.max_ratio <= 2 && secs < 5, os.str()};
}

Outcome criterion2() {
  const Algebra v = parse_algebra("Q[t]/(t^3)");
  const GenericInvariants g = generic_invariants(v, 0, 16);
  const DegreeSequence bf = brute_force_degrees(induce_univariate(v, parse_ratfunc("t^2")), 5);
  bool in_range = bf.values.size() == 5;
  const auto pw = powers_of(2, 5);
  double lo = 1e300, hi = 0;
  for (std::size_t n = 0; n < bf.values.size(); ++n) {
    const double q = Rational(bf.values[n], pw[n]).convert_to<double>();
    lo = std::min(lo, q);
    hi = std::max(hi, q);
    in_range = in_range && q >= 1 && q <= 8;
  }
  std::ostringstream os;
  os << "delta " << g.delta << ", k " << g.k << ", deg_1 = " << join(bf.values) << ", deg/2^n in [" << lo << ", " << hi
     << "]";
  return {g.delta == 3 && g.k == 1 && in_range, os.str()};
}

Outcome criterion3() {
  const Algebra v = parse_algebra("Q[t]/(t^2)");
  const UniRationalFunction phi = parse_ratfunc("(t^2+1)/(t-2)");
  const GenericInvariants g = generic_invariants(v, 0, 16);
  const DegreeSequence bf = brute_force_degrees(induce_univariate(v, phi), 4);
  const DegreeSequence pred = theorem_a_predict(static_cast<int>(g.k), phi.degree(), 1, 4);
  const AsymptoticResult r = asymptotic_check(bf, pred);
  std::ostringstream os;
  os << "deg_1 = " << join(bf.values) << " vs " << join(pred.values) << ", verdict " << to_string(r.verdict)
     << ", ratio " << r.max_ratio;
  return {phi.degree() == 2 && pred.values == powers_of(2, 4) && r.verdict == Verdict::pass, os.str()};
}

Outcome criterion4() {
  const Algebra v = parse_algebra("Mat(2)");
  bool ok = true;
  std::size_t delta = 0, k = 0;
  for (std::uint64_t seed : {0ull, 1ull, 7ull, 12345ull, 0xdeadbeefull}) {
    const AlgebraProfile p = analyze(v, seed, 16);
    delta = p.generic_delta.value_or(0);
    k = p.generic_k.value_or(0);
    ok = ok && delta == 2 && k == 2;
  }
  std::ostringstream os;
  os << "delta_V " << delta << ", k " << k << " over 5 seeds";
  return {ok, os.str()};
}

Outcome criterion5() {
  const Algebra v = parse_algebra("Q[t]/(t^2)");
  const IntMatrix a = parse_matrix("[[2,1],[1,1]]");
  const DegreeSequence bf = brute_force_degrees(induce_monomial(a, v), 4);
  const DegreeSequence pred = theorem_b_predict(a, 2, 1, 1, 4);
  AsymptoticOptions opts;
  opts.c_max = 16;
  const AsymptoticResult r = asymptotic_check(bf, pred, opts);
  const double lambda = dynamical_degree(a, 1, 2, 1);
  std::ostringstream os;
  os.precision(7);
  os << "deg_1 = " << join(bf.values) << " vs " << join(pred.values) << ", verdict " << to_string(r.verdict)
     << ", lambda_1 " << lambda;
  return {r.verdict == Verdict::pass && std::abs(lambda - 2.618034) <= 1e-3, os.str()};
}

Outcome criterion6() {
  const IntMatrix a = parse_matrix("[[1,1],[1,0]]");
  const DegreeSequence bf = brute_force_degrees(induce_monomial(a, parse_algebra("C^1")), 5);
  DegreeSequence wedge{{}, 1, Provenance::formula, false};
  std::vector<Integer> shifted;
  for (unsigned n = 1; n <= 5; ++n) {
    wedge.values.push_back(int_norm(exterior_power<Integer>(matrix_power(a, n), 1)));
    shifted.push_back(int_norm(matrix_power(a, n + 1)));
  }
  const AsymptoticResult r = asymptotic_check(bf, wedge);
  std::ostringstream os;
  os << "deg_1 = " << join(bf.values) << ", ||A^n|| = " << join(wedge.values) << ", ratio " << r.max_ratio
     << ", ||A^(n+1)|| = " << join(shifted);
  return {bf.values == std::vector<Integer>{2, 3, 5, 8, 13} && r.max_ratio <= 2 && bf.values == shifted, os.str()};
}

Outcome criterion7() {
  const Integer skew = skew_degree(1, 1, 2, 1, 1, 1);
  // (z, t) -> (g(z), h(z, t)) with deg g = 2 and h of bidegree (1, 1) pulls
  // H1 back to 2 H1 and H2 back to 1 H1 + 1 H2.
  const long skew_oracle = p1p1_intersect(2 + 1, 1, 1, 1);
  const Integer prod = product_degree(1, 1, 1, {1, 2}, {1, 2});
  const long prod_oracle = p1p1_intersect(2, 2, 1, 1);
  std::ostringstream os;
  os << "skew " << skew << " (oracle " << skew_oracle << "), product " << prod << " (oracle " << prod_oracle << ")";
  return {skew == 4 && skew_oracle == 4 && prod == 4 && prod_oracle == 4, os.str()};
}

Outcome criterion8() {
  struct Case {
    const char* algebra;
    const char* matrix;
  };
  const std::vector<Case> cases = {
      {"Q[t]/(t^2)", "[[2]]"}, {"Q[t]/(t^3)", "[[1,1],[1,0]]"}, {"Q[t]/(t^2)", "[[1,0],[0,1]]"}, {"Q[t]/(t^3)", "[[1]]"}};
  bool ok = true;
  std::ostringstream os;
  for (const Case& c : cases) {
    const bool r = conjugacy_check_local(parse_algebra(c.algebra), parse_matrix(c.matrix));
    ok = ok && r;
    os << (&c == &cases.front() ? "" : "; ") << c.algebra << " " << c.matrix << ": " << (r ? "equal" : "differ");
  }
  return {ok, os.str()};
}

// Property suites. Each returns the number of cases checked and throws or
// returns -1 on the first counterexample.

int suite_cauchy_binet() {
  std::mt19937_64 rng(901);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const IntMatrix a = random_int_matrix(rng, d), b = random_int_matrix(rng, d);
    for (int i = 0; i <= d; ++i)
      if (exterior_power<Integer>(naive_product(a, b), i) != naive_product(exterior_power(a, i), exterior_power(b, i)))
        return -1;
  }
  return 100;
}

int suite_quadratic_round_trip() {
  std::mt19937_64 rng(902);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 4;
    const Algebra v =
        Algebra::quotient(random_monic(rng, deg)).transported(to_rational(random_unimodular_free(rng, deg)));
    const Algebra back = algebra_from_quadratic(squaring_map(v));
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j)
        for (std::size_t k = 0; k < v.dim(); ++k)
          if (back.constant(i, j, k) != v.constant(i, j, k)) return -1;
  }
  return 100;
}

int suite_transport() {
  std::mt19937_64 rng(903);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 4;
    const Algebra v = trial % 10 == 9 ? Algebra::matrices(2) : Algebra::quotient(random_monic(rng, deg, -2, 2));
    const RatMatrix m = to_rational(random_unimodular_free(rng, static_cast<int>(v.dim()), -2, 2));
    const Algebra w = v.transported(m);
    if (!check_isomorphism_witness(v, w, m)) return -1;
    const AlgebraProfile pv = analyze(v, 5, 8), pw = analyze(w, 5, 8);
    if (!(pv.flags == pw.flags) || pv.reduced_dim != pw.reduced_dim || pv.generic_delta != pw.generic_delta ||
        pv.generic_k != pw.generic_k)
      return -1;
  }
  return 100;
}

int suite_nilradical() {
  std::mt19937_64 rng(904);
  for (int trial = 0; trial < 100; ++trial) {
    const Algebra v = Algebra::quotient(random_monic(rng, 1 + trial % 5, -2, 2));
    const Nilradical n = nilradical_and_m(v);
    RatMatrix span(static_cast<Eigen::Index>(v.dim()), static_cast<Eigen::Index>(n.basis.size()));
    for (std::size_t c = 0; c < n.basis.size(); ++c) {
      if (!is_nilpotent(n.basis[c])) return -1;
      span.col(static_cast<Eigen::Index>(c)) = n.basis[c].coords();
    }
    for (const auto& x : n.basis)
      for (std::size_t i = 0; i < v.dim(); ++i) {
        RatMatrix aug(span.rows(), span.cols() + 1);
        aug << span, multiply(AlgElement::basis(v, i), x).coords();
        if (rank(aug) != rank(span)) return -1;
      }
  }
  return 100;
}

int suite_unit_fixed_point() {
  std::mt19937_64 rng(905);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + trial % 4;
    const Algebra v =
        Algebra::quotient(random_monic(rng, deg)).transported(to_rational(random_unimodular_free(rng, deg)));
    if (!unit_fixed_point_check(v)) return -1;
  }
  return 100;
}

int suite_iterate_degrees() {
  std::mt19937_64 rng(906);
  std::uniform_int_distribution<int> coef(-2, 2);
  int cases = 0;
  for (int trial = 0; cases < 100 && trial < 1000; ++trial) {
    const Algebra v = Algebra::quotient(random_monic(rng, 1 + trial % 2, -2, 2));
    std::vector<Rational> num, den;
    for (int i = 0; i <= 1 + trial % 2; ++i) num.emplace_back(coef(rng));
    for (int i = 0; i <= trial % 2; ++i) den.emplace_back(coef(rng));
    num.back() = 1;
    den.back() = 1;
    const UniRationalFunction phi{UniPoly(num), UniPoly(den)};
    if (phi.degree() < 1) continue;
    try {
      const AffineRationalMap f = induce_univariate(v, phi);
      AffineRationalMap fn = f;
      for (unsigned n = 1; n <= 3; ++n) {
        if (n > 1) fn = compose(f, fn);
        const AffineRationalMap direct = induce_univariate(v, iterate(phi, n));
        if (map_degree(fn) != map_degree(direct) || !(fn == direct)) return -1;
      }
    } catch (const DomainError&) {
      continue;
    } catch (const IndeterminacyError&) {
      continue;
    }
    ++cases;
  }
  return cases;
}

int suite_submultiplicative() {
  std::mt19937_64 rng(907);
  std::uniform_int_distribution<int> coef(-2, 2);
  int cases = 0;
  for (int trial = 0; cases < 100 && trial < 1000; ++trial) {
    std::vector<RatFunc> coords;
    for (int c = 0; c < 2; ++c) {
      MultiPoly num(std::size_t{2}), den(std::size_t{2});
      for (int e0 = 0; e0 <= 2; ++e0)
        for (int e1 = 0; e0 + e1 <= 2; ++e1) {
          num += pow(var(2, 0), e0) * pow(var(2, 1), e1) * Rational(coef(rng));
          if (trial % 2 && e0 + e1 <= 1) den += pow(var(2, 0), e0) * pow(var(2, 1), e1) * Rational(coef(rng));
        }
      if (den.is_zero()) den = MultiPoly(2, Rational(1));
      coords.emplace_back(num, den);
    }
    DegreeSequence s;
    try {
      s = brute_force_degrees(AffineRationalMap(coords), 3);
    } catch (const Error&) {
      continue;
    }
    ++cases;
    const auto& v = s.values;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; i + j + 1 < v.size(); ++j)
        if (v[i + j + 1] > v[i] * v[j]) return -1;
  }
  return cases;
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  const std::vector<std::pair<const char*, std::function<int()>>> suites = {
      {"cauchy-binet", suite_cauchy_binet},
      {"quadratic round trip", suite_quadratic_round_trip},
      {"transport invariance", suite_transport},
      {"nilradical ideal", suite_nilradical},
      {"unit fixed point", suite_unit_fixed_point},
      {"iterate degrees", suite_iterate_degrees},
      {"submultiplicativity", suite_submultiplicative},
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& [name, run] : suites) {
    const int n = run();
    ok = ok && n >= 100;
    os << name << " " << (n < 0 ? std::string("counterexample") : std::to_string(n)) << "; ";
  }
  const double secs = seconds_since(t0);
  os << "total " << secs << " s";
  return {ok && secs < 120, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"theorem A split case", criterion1},     {"theorem A nilpotent case", criterion2},
      {"theorem A rational phi", criterion3},   {"matrix algebra k", criterion4},
      {"theorem B monomial", criterion5},       {"classical monomial reduction", criterion6},
      {"skew and product formulas", criterion7}, {"conjugacy identity", criterion8},
      {"property suites", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
