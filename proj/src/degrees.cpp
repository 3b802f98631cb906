#include "algdyn/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "algdyn/spectral.hpp"

namespace algdyn {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::brute_force: return "brute_force";
    case Provenance::theorem_a: return "theorem_a";
    case Provenance::theorem_b: return "theorem_b";
    case Provenance::formula: return "formula";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Integer product_degree(int p, int n, int n_prime, const std::vector<Integer>& degs_f,
                       const std::vector<Integer>& degs_g) {
  if (p < 0 || n < 0 || n_prime < 0 || p > n + n_prime) throw DomainError("product_degree: p outside [0, n + n']");
  Integer total = 0;
  for (int i = std::max(0, p - n_prime); i <= std::min(p, n); ++i) {
    const int j = p - i;
    if (static_cast<std::size_t>(i) >= degs_f.size() || static_cast<std::size_t>(j) >= degs_g.size())
      throw DomainError("product_degree: missing deg_" + std::to_string(i) + " or deg_" + std::to_string(j));
    total += binomial(p, i) * binomial(n + n_prime - p, n - i) * degs_f[static_cast<std::size_t>(i)] *
             degs_g[static_cast<std::size_t>(j)];
  }
  return total;
}

Integer skew_degree(int p, int d, const Integer& deg_p_g, const Integer& deg_pm1_g, const Integer& delta1,
                    const Integer& delta_d) {
  if (d < 1 || p < 1 || p > d + 1) throw DomainError("skew_degree: p outside [1, d + 1]");
  const int c = d + 1 - p;
  return Integer(c) * deg_p_g + Integer(p) * (delta1 + Integer(c) * delta_d) * deg_pm1_g;
}

DegreeSequence theorem_a_predict(int k, int deg_phi, int p, std::size_t iterations) {
  if (k < 1 || deg_phi < 1 || p < 0) throw DomainError("theorem_a_predict: need k >= 1, deg >= 1, p >= 0");
  DegreeSequence out{{}, p, Provenance::theorem_a, false};
  const Integer base = power(Rational(deg_phi), static_cast<unsigned>(std::min(p, k))).convert_to<Integer>();
  Integer v = 1;
  for (std::size_t n = 0; n < iterations; ++n) out.values.push_back(v *= base);
  return out;
}

std::pair<int, int> theorem_b_window(int d, int k_dim, int m, int p) {
  if (m < 1 || m > k_dim) throw DomainError("theorem_b: need 1 <= m <= dim V");
  if (p < 0 || p > d * k_dim) throw DomainError("theorem_b: p outside [0, d * dim V]");
  return {std::max(0, p - d * (k_dim - m)), std::min(p, d * m)};
}

namespace {

void require_invertible(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("exponent matrix must be square");
  if (determinant<Integer>(a) == 0) throw DomainError("exponent matrix is singular");
}

Integer as_integer(const Rational& r) { return numerator(r); }

}  // namespace

DegreeSequence theorem_b_predict(const IntMatrix& a, int k_dim, int m, int p, std::size_t iterations) {
  require_invertible(a);
  const int d = static_cast<int>(a.rows());
  const auto [lo, hi] = theorem_b_window(d, k_dim, m, p);
  DegreeSequence out{{}, p, Provenance::theorem_b, false};
  IntMatrix an = IntMatrix::Identity(d, d);
  for (std::size_t n = 1; n <= iterations; ++n) {
    an = an * a;
    const IntMatrix big = block_diagonal<Integer>(an, m);
    Integer best = 0;
    for (int i = lo; i <= hi; ++i) best = std::max(best, as_integer(norm_max<Integer>(exterior_power<Integer>(big, i))));
    out.values.push_back(best);
  }
  return out;
}

Integer block_exterior_norm(const IntMatrix& b, int m, int i) {
  const int d = static_cast<int>(b.rows());
  if (i < 0 || i > d * m) throw DomainError("exterior degree outside [0, d * m]");
  std::vector<Integer> norms;
  for (int j = 0; j <= d; ++j) norms.push_back(as_integer(norm_max<Integer>(exterior_power<Integer>(b, j))));
  // best[c][s]: max product over c blocks with exponents summing to s.
  std::vector<Integer> best(static_cast<std::size_t>(i) + 1, Integer(-1));
  best[0] = 1;
  for (int c = 0; c < m; ++c) {
    std::vector<Integer> next(best.size(), Integer(-1));
    for (int s = 0; s <= i; ++s) {
      if (best[static_cast<std::size_t>(s)] < 0) continue;
      for (int j = 0; j <= d && s + j <= i; ++j) {
        const Integer v = best[static_cast<std::size_t>(s)] * norms[static_cast<std::size_t>(j)];
        auto& slot = next[static_cast<std::size_t>(s + j)];
        if (v > slot) slot = v;
      }
    }
    best = std::move(next);
  }
  return best[static_cast<std::size_t>(i)];
}

double dynamical_degree(const IntMatrix& a, int m, int k_dim, int p) {
  require_invertible(a);
  const int d = static_cast<int>(a.rows());
  const auto [lo, hi] = theorem_b_window(d, k_dim, m, p);
  std::vector<double> moduli;
  for (double x : spectral_moduli(a))
    for (int c = 0; c < m; ++c) moduli.push_back(x);
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  // Kahan-compensated prefix sums of log moduli.
  double sum = 0, carry = 0, best = (lo == 0) ? 0.0 : -INFINITY;
  for (int i = 1; i <= hi; ++i) {
    const double y = std::log(moduli[static_cast<std::size_t>(i - 1)]) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (i >= lo) best = std::max(best, sum);
  }
  return std::exp(best);
}

DegreeSequence brute_force_degrees(const AffineRationalMap& f, std::size_t iterations,
                                   const BruteForceOptions& options) {
  if (iterations == 0) throw DomainError("brute_force_degrees needs at least one iterate");
  DegreeSequence out{{}, 1, Provenance::brute_force, false};
  const ProjectiveMap base = homogenize_reduce(f);
  ProjectiveMap current = base;
  for (std::size_t n = 1; n <= iterations; ++n) {
    if (n > 1) {
      try {
        current = compose(base, current);
      } catch (const Error& e) {
        throw IndeterminacyError("iterate " + std::to_string(n) + " collapsed: " + e.what());
      }
    }
    out.values.emplace_back(current.degree);
    std::size_t terms = 0;
    for (const auto& c : current.components) terms += c.size();
    if (terms > options.term_budget && n < iterations) {
      out.truncated = true;
      break;
    }
  }
  return out;
}

double log_integer(const Integer& x) {
  if (x <= 0) throw DomainError("log of a non-positive integer");
  const std::size_t bits = mp::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  const Integer top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

AsymptoticResult asymptotic_check(const DegreeSequence& measured, const DegreeSequence& predicted,
                                  const AsymptoticOptions& options) {
  const auto& a = measured.values;
  const auto& b = predicted.values;
  if (a.size() != b.size()) throw DomainError("asymptotic_check: sequences differ in length");
  if (a.size() < 2) throw DomainError("asymptotic_check: need at least two terms");
  std::vector<double> gap;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0 || b[i] <= 0) throw DomainError("asymptotic_check: sequences must be positive");
    gap.push_back(log_integer(a[i]) - log_integer(b[i]));
  }
  AsymptoticResult r;
  double worst = 0;
  for (double g : gap) worst = std::max(worst, std::abs(g));
  r.max_ratio = std::exp(worst);
  const std::size_t n = a.size();
  r.window_start = std::min(n / 2 + 1, n - 1);
  r.slope_drift = std::abs(gap[n - 1] - gap[r.window_start - 1]) / static_cast<double>(n - r.window_start);
  if (r.max_ratio > options.c_max) {
    r.verdict = Verdict::fail;
    r.reason = "ratio exceeds C_max";
  } else if (r.slope_drift > options.slope_epsilon) {
    r.verdict = n < options.min_length ? Verdict::inconclusive : Verdict::fail;
    r.reason = "growth rates differ";
  } else if (n < options.min_length) {
    r.verdict = Verdict::inconclusive;
    r.reason = "too few terms";
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

}  // namespace algdyn
