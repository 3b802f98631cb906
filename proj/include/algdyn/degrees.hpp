#ifndef ALGDYN_DEGREES_HPP
#define ALGDYN_DEGREES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "algdyn/matrix.hpp"
#include "algdyn/rational_map.hpp"

namespace algdyn {

enum class Provenance { brute_force, theorem_a, theorem_b, formula };
std::string to_string(Provenance p);

/// values[n - 1] is the degree of the n-th iterate.
struct DegreeSequence {
  std::vector<Integer> values;
  int p = 1;
  Provenance provenance = Provenance::formula;
  /// Set when brute force stopped early on the term budget.
  bool truncated = false;
};

/// Degree of f x g on P^n x P^n' for the class H + H'. degs[i] is deg_i and
/// must cover 0..min(p, n) (resp. n'); deg_0 is normally 1.
Integer product_degree(int p, int n, int n_prime, const std::vector<Integer>& degs_f,
                       const std::vector<Integer>& degs_g);

/// Skew product (g(z), h(z, t)) over P^d, for the class H_d + H_1.
/// delta1 is the degree of h in t, delta_d its degree in z.
Integer skew_degree(int p, int d, const Integer& deg_p_g, const Integer& deg_pm1_g, const Integer& delta1,
                    const Integer& delta_d);

DegreeSequence theorem_a_predict(int k, int deg_phi, int p, std::size_t iterations);

/// Lowest and highest exterior degree in the window for F_A on V^d.
std::pair<int, int> theorem_b_window(int d, int k_dim, int m, int p);

/// max over the window of ||wedge^i diag(A; m)^n||_max for n = 1..iterations.
DegreeSequence theorem_b_predict(const IntMatrix& a, int k_dim, int m, int p, std::size_t iterations);

/// ||wedge^i diag(B; m)||_max computed from the blocks alone: max over
/// i_1 + ... + i_m = i of prod_j ||wedge^{i_j} B||_max.
Integer block_exterior_norm(const IntMatrix& b, int m, int i);

/// lambda_p: max over the window of the product of the top i eigenvalue
/// moduli of diag(A; m).
double dynamical_degree(const IntMatrix& a, int m, int k_dim, int p);

struct BruteForceOptions {
  /// Stop after an iterate whose reduced components hold more terms.
  std::size_t term_budget = 5'000'000;
};

/// deg_1 of f, f^2, ..., f^N from reduced homogeneous iterates.
DegreeSequence brute_force_degrees(const AffineRationalMap& f, std::size_t iterations,
                                   const BruteForceOptions& options = {});

struct AsymptoticOptions {
  double c_max = 16.0;
  double slope_epsilon = 0.05;
  std::size_t min_length = 4;
};

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct AsymptoticResult {
  Verdict verdict = Verdict::inconclusive;
  double max_ratio = 0;
  /// |log(a_N / a_s) - log(b_N / b_s)| / (N - s) over the tail window.
  double slope_drift = 0;
  std::size_t window_start = 1;  ///< s, 1-based
  std::string reason;
};

/// Finite-sample test of a_n ~ b_n. The slope is measured on the tail
/// n in [floor(N/2) + 1, N] since the relation only concerns large n.
AsymptoticResult asymptotic_check(const DegreeSequence& measured, const DegreeSequence& predicted,
                                  const AsymptoticOptions& options = {});

/// Natural log of a positive integer of any size.
double log_integer(const Integer& x);

}  // namespace algdyn

#endif  // ALGDYN_DEGREES_HPP
