#ifndef ALGDYN_SPECTRAL_HPP
#define ALGDYN_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "algdyn/matrix.hpp"
#include "algdyn/unipoly.hpp"

namespace algdyn {

struct SpectralOptions {
  double tolerance = 1e-9;
  int max_iterations = 2000;
};

/// Complex roots of a squarefree polynomial by Aberth-Ehrlich iteration.
/// Throws NumericError when the iteration does not settle.
std::vector<std::complex<long double>> squarefree_roots(const UniPoly& p,
                                                        const SpectralOptions& options = {});

/// All complex roots with multiplicity, via squarefree decomposition.
std::vector<std::complex<long double>> polynomial_roots(const UniPoly& p,
                                                        const SpectralOptions& options = {});

/// Moduli of the eigenvalues of M (roots of its exact characteristic
/// polynomial), sorted in descending order.
std::vector<double> spectral_moduli(const IntMatrix& m, const SpectralOptions& options = {});

}  // namespace algdyn

#endif  // ALGDYN_SPECTRAL_HPP
