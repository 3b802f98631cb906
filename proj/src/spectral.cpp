#include "algdyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace algdyn {

namespace {

using Complex = std::complex<long double>;

Complex horner(const std::vector<long double>& c, Complex z) {
  Complex acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_derivative(const std::vector<long double>& c, Complex z) {
  Complex acc(0);
  for (std::size_t i = c.size() - 1; i >= 1; --i) acc = acc * z + c[i] * static_cast<long double>(i);
  return acc;
}

}  // namespace

std::vector<Complex> squarefree_roots(const UniPoly& p, const SpectralOptions& options) {
  const int n = p.degree();
  if (n < 0) throw DomainError("roots of the zero polynomial");
  if (n == 0) return {};
  const UniPoly q = monic(p);
  std::vector<long double> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[i] = static_cast<long double>(q.coefficient(i).convert_to<long double>());
  if (n == 1) return {Complex(-c[0])};

  // Cauchy bound for the initial circle.
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(bound * 0.5L, angle);
  }

  const long double tol = static_cast<long double>(options.tolerance) * 1e-3L;
  long double last_step = 0;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    last_step = 0;
    for (int k = 0; k < n; ++k) {
      const Complex value = horner(c, z[k]);
      if (value == Complex(0)) continue;
      const Complex ratio = value / horner_derivative(c, z[k]);
      Complex repulsion(0);
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[k] -= step;
      last_step = std::max(last_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (last_step < tol) {
      // A couple of Newton sweeps to polish simple roots.
      for (int sweep = 0; sweep < 2; ++sweep) {
        for (auto& r : z) {
          const Complex d = horner_derivative(c, r);
          if (d != Complex(0)) r -= horner(c, r) / d;
        }
      }
      return z;
    }
  }
  std::ostringstream msg;
  msg << "root refinement did not converge: degree " << n << ", " << options.max_iterations
      << " iterations, last relative step " << static_cast<double>(last_step);
  throw NumericError(msg.str());
}

std::vector<Complex> polynomial_roots(const UniPoly& p, const SpectralOptions& options) {
  std::vector<Complex> roots;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    for (const auto& r : squarefree_roots(factors[i], options))
      for (std::size_t m = 0; m <= i; ++m) roots.push_back(r);
  }
  return roots;
}

std::vector<double> spectral_moduli(const IntMatrix& m, const SpectralOptions& options) {
  std::vector<double> moduli;
  for (const auto& r : polynomial_roots(char_poly(m), options)) moduli.push_back(static_cast<double>(std::abs(r)));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  return moduli;
}

}  // namespace algdyn
