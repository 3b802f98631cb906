#ifndef ALGDYN_SRC_MODULAR_GCD_HPP
#define ALGDYN_SRC_MODULAR_GCD_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "algdyn/multipoly.hpp"

namespace algdyn::detail {

/// gcd of nonzero p, q over Q by evaluation/interpolation modulo word-size
/// primes. `vars` lists every variable either input involves. Returns
/// nullopt when no verified answer was found within the prime budget.
std::optional<MultiPoly> modular_gcd(const MultiPoly& p, const MultiPoly& q, const std::vector<std::size_t>& vars);

}  // namespace algdyn::detail

#endif  // ALGDYN_SRC_MODULAR_GCD_HPP
