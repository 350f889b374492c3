#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/variables.hpp"
#include "affcrys/xfactor.hpp"

namespace affcrys {

/**
 * @brief Total raising operator on the zero-sum X_{*,0} lattice: multiply by A_{i,0}.
 *        The membership test (NotInCoherentLattice on failure) runs on every call.
 */
[[nodiscard]] inline Monomial e_coh(const CrystalParams& p, const Monomial& m, int i) {
  if (i < 0 || i >= p.n) throw CrystalError("e_coh: Dynkin label out of range");
  (void)coherent_vector(p, m);
  return mono_mul(m, a_monomial(p, i, 0));
}

/// Total lowering operator on the zero-sum X_{*,0} lattice: multiply by A_{i,0}^{-1}.
[[nodiscard]] inline Monomial f_coh(const CrystalParams& p, const Monomial& m, int i) {
  if (i < 0 || i >= p.n) throw CrystalError("f_coh: Dynkin label out of range");
  (void)coherent_vector(p, m);
  return mono_mul(m, mono_pow(a_monomial(p, i, 0), -1));
}

/**
 * @brief Limit statistics on the zero-sum lattice, read off the exponent
 *        vector (x_1, ..., x_n):  eps_i = x_{i+1} and phi_i = x_i, with x_0
 *        read as x_n.  Returned as (eps, phi) vectors indexed by Dynkin label.
 */
[[nodiscard]] inline std::pair<std::vector<long long>, std::vector<long long>> coh_stats(
    const CrystalParams& p, const Monomial& m) {
  auto xs = coherent_vector(p, m);
  std::size_t n = static_cast<std::size_t>(p.n);
  std::vector<long long> eps(n), phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    eps[i] = xs[i];
    phi[i] = xs[(i + n - 1) % n];
  }
  return {eps, phi};
}

}  // namespace affcrys
