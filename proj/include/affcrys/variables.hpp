#pragma once

#include <cstddef>
#include <vector>

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"

namespace affcrys {

/**
 * @brief Generator monomial
 *        A_{i,k} = Y_{i,k} * Y_{i,k+K} * Y_{i-1,k+prev_shift[i]}^{-1} * Y_{i+1,k+next_shift[i]}^{-1}
 *        (first indices mod n), assembled as a product so that coinciding
 *        variables collapse into one exponent.  <h_j, wt(A_{i,k})> = a_{ji}
 *        for every orientation.
 */
[[nodiscard]] inline Monomial a_monomial(const CrystalParams& p, int i, long long k) {
  if (i < 0 || i >= p.n) throw InvalidParams("a_monomial: Dynkin label out of range");
  std::size_t ui = static_cast<std::size_t>(i);
  int prev = (i + p.n - 1) % p.n;
  int next = (i + 1) % p.n;
  Monomial m = mono_y(i, k);
  m = mono_mul(m, mono_y(i, detail::chk_add(k, p.K)));
  m = mono_mul(m, mono_y(prev, detail::chk_add(k, p.prev_shift[ui]), -1));
  m = mono_mul(m, mono_y(next, detail::chk_add(k, p.next_shift[ui]), -1));
  return m;
}

/**
 * @brief X_{i,k} = Y_{i-1,k+1}^{-1} * Y_{i,k}, first indices mod n, so that
 *        X_{n,k} = X_{0,k}.  Under the default orientation
 *        A_{i,k}^{-1} = X_{i,k}^{-1} * X_{i+1,k}.
 */
[[nodiscard]] inline Monomial x_monomial(const CrystalParams& p, int i, long long k) {
  int j = ((i % p.n) + p.n) % p.n;
  int prev = (j + p.n - 1) % p.n;
  return mono_mul(mono_y(prev, detail::chk_add(k, 1), -1), mono_y(j, k));
}

/// Seed Y_{0,1}^{-s} * Y_{1,0}^{s} = X_{1,0}^{s} generating the level-s one-row model.
[[nodiscard]] inline Monomial seed_m1s(const CrystalParams& p, long long s) {
  if (s < 1) throw InvalidParams("seed_m1s requires s >= 1");
  return mono_pow(x_monomial(p, 1, 0), s);
}

/// prod_{j=1..n} X_{j,0}^{xs[j-1]}.
[[nodiscard]] inline Monomial x_power_product(const CrystalParams& p, const std::vector<long long>& xs) {
  if (xs.size() != static_cast<std::size_t>(p.n)) throw InvalidParams("x_power_product: rank mismatch");
  Monomial m;
  for (int j = 1; j <= p.n; ++j)
    m = mono_mul(m, mono_pow(x_monomial(p, j, 0), xs[static_cast<std::size_t>(j - 1)]));
  return m;
}

}  // namespace affcrys
