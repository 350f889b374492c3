#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/variables.hpp"

namespace affcrys {

/**
 * @brief A finite product of X-variables, keyed by (k, j) with j in 1..n.
 *
 * The representative label j of the residue class is kept in 1..n (so the
 * class of 0 is written X_{n,k}), matching the usual display of these
 * products.
 */
struct XFactorization {
  std::map<std::pair<long long, int>, long long> exponents;  // (k, j) -> e != 0

  [[nodiscard]] Monomial expand(const CrystalParams& p) const {
    Monomial m;
    for (const auto& [key, e] : exponents) m = mono_mul(m, mono_pow(x_monomial(p, key.second, key.first), e));
    return m;
  }

  friend bool operator==(const XFactorization&, const XFactorization&) = default;
};

/**
 * @brief Attempt to write m as a finite product of X-variables.
 *
 * Candidate exponents come from the diagonal sums
 *   n_{j,l} = sum_{t >= 0, l-t >= kmin} y_{(j+t) mod n, l-t},
 * which is the unique solution of the defining relations given that the
 * second-index support of m is bounded below; any factorization has X-support
 * inside [kmin, kmax], so scanning that window and re-expanding decides
 * existence.  Returns nullopt if the expansion does not reproduce m.
 */
[[nodiscard]] inline std::optional<XFactorization> try_x_factorize(const CrystalParams& p, const Monomial& m) {
  XFactorization fac;
  if (m.is_one()) return fac;
  long long kmin = m.factors.begin()->first.first;
  long long kmax = m.factors.rbegin()->first.first;
  for (long long l = kmin; l <= kmax; ++l) {
    for (int j = 1; j <= p.n; ++j) {
      long long e = 0;
      for (long long t = 0; l - t >= kmin; ++t)
        e = detail::chk_add(e, m.exponent((j + static_cast<int>(t % p.n)) % p.n, l - t));
      if (e != 0) fac.exponents[{l, j}] = e;
    }
  }
  if (fac.expand(p) == m) return fac;
  return std::nullopt;
}

/// As try_x_factorize, but throws NotXFactorizable on failure.
[[nodiscard]] inline XFactorization x_factorize(const CrystalParams& p, const Monomial& m) {
  auto fac = try_x_factorize(p, m);
  if (!fac) throw NotXFactorizable("monomial is not a product of X-variables: " + display(m));
  return *fac;
}

/**
 * @brief Exponent vector (x_1, ..., x_n) of a zero-sum product of X_{j,0}'s.
 *        Throws NotInCoherentLattice if m is not of that shape.
 */
[[nodiscard]] inline std::vector<long long> coherent_vector(const CrystalParams& p, const Monomial& m) {
  auto fac = try_x_factorize(p, m);
  if (!fac) throw NotInCoherentLattice("monomial is not a product of X-variables: " + display(m));
  std::vector<long long> xs(static_cast<std::size_t>(p.n), 0);
  long long sum = 0;
  for (const auto& [key, e] : fac->exponents) {
    if (key.first != 0)
      throw NotInCoherentLattice("X-support extends beyond second index 0: " + display(m));
    xs[static_cast<std::size_t>(key.second - 1)] = e;
    sum = detail::chk_add(sum, e);
  }
  if (sum != 0) throw NotInCoherentLattice("X-exponents do not sum to zero: " + display(m));
  return xs;
}

[[nodiscard]] inline std::string display(const XFactorization& fac) {
  if (fac.exponents.empty()) return "1";
  std::string s;
  for (const auto& [key, e] : fac.exponents) {
    if (!s.empty()) s += "*";
    s += "X(" + std::to_string(key.second) + "," + std::to_string(key.first) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace affcrys
