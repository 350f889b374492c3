#pragma once

#include <optional>

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/string_ops.hpp"
#include "affcrys/xfactor.hpp"

namespace affcrys {

namespace detail {

/// Require m to be a square-free product of X-variables; returns its factorization.
inline XFactorization require_squarefree(const CrystalParams& p, const Monomial& m) {
  auto fac = try_x_factorize(p, m);
  if (!fac) throw NotXFactorizable("quotient operators need a product of X-variables: " + display(m));
  for (const auto& [key, e] : fac->exponents)
    if (e < 0 || e > 1)
      throw NotXFactorizable("quotient operators need square-free X-exponents: " + display(m));
  return *fac;
}

}  // namespace detail

/**
 * @brief Raising operator of the square-free quotient: apply the plain
 *        monomial operator, then kill any image whose X-factorization has an
 *        exponent of 2 or more.  The image of a square-free element is always
 *        again a product of X-variables.
 */
[[nodiscard]] inline std::optional<Monomial> e_bar(const CrystalParams& p, const Monomial& m, int i) {
  (void)detail::require_squarefree(p, m);
  auto img = e_std(p, m, i);
  if (!img) return std::nullopt;
  auto fac = try_x_factorize(p, *img);
  if (!fac) throw CrystalError("square-free image failed to refactorize: " + display(*img));
  for (const auto& [key, e] : fac->exponents) {
    if (e < 0) throw CrystalError("square-free image acquired a negative X-exponent: " + display(*img));
    if (e >= 2) return std::nullopt;
  }
  return img;
}

/// Lowering operator of the square-free quotient; see e_bar.
[[nodiscard]] inline std::optional<Monomial> f_bar(const CrystalParams& p, const Monomial& m, int i) {
  (void)detail::require_squarefree(p, m);
  auto img = f_std(p, m, i);
  if (!img) return std::nullopt;
  auto fac = try_x_factorize(p, *img);
  if (!fac) throw CrystalError("square-free image failed to refactorize: " + display(*img));
  for (const auto& [key, e] : fac->exponents) {
    if (e < 0) throw CrystalError("square-free image acquired a negative X-exponent: " + display(*img));
    if (e >= 2) return std::nullopt;
  }
  return img;
}

}  // namespace affcrys
