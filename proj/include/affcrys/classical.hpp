#pragma once

#include <cstddef>
#include <vector>

#include <boost/rational.hpp>

#include "affcrys/errors.hpp"
#include "affcrys/params.hpp"
#include "affcrys/weight.hpp"

namespace affcrys {

using Rational = boost::rational<long long>;

/**
 * @brief Coordinates of cl(w - base) in the classical simple roots alpha_1..alpha_{n-1}.
 *
 * The classical projection drops the Lambda_0 component; the remaining
 * difference vector is expanded in the alpha-basis by solving the
 * finite-type Cartan system (tridiagonal [2, -1] of size n-1) over the
 * rationals with partial-pivot elimination.
 */
[[nodiscard]] inline std::vector<Rational> classical_alpha_coords(const CrystalParams& p, const Weight& w,
                                                                  const Weight& base) {
  if (w.lambda.size() != static_cast<std::size_t>(p.n) || base.lambda.size() != static_cast<std::size_t>(p.n))
    throw CrystalError("classical_alpha_coords: rank mismatch");
  int nf = p.n - 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(nf),
                                       std::vector<Rational>(static_cast<std::size_t>(nf) + 1, Rational(0)));
  for (int r = 0; r < nf; ++r) {
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = Rational(2);
    if (r > 0) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r - 1)] = Rational(-1);
    if (r + 1 < nf) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + 1)] = Rational(-1);
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(nf)] =
        Rational(detail::chk_add(w.lambda[static_cast<std::size_t>(r + 1)],
                                 detail::chk_mul(-1, base.lambda[static_cast<std::size_t>(r + 1)])));
  }
  for (int col = 0; col < nf; ++col) {
    int piv = -1;
    for (int r = col; r < nf; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != Rational(0)) {
        if (piv == -1 ||
            abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
          piv = r;
      }
    if (piv == -1) throw CrystalError("classical Cartan system is singular");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < nf; ++r) {
      if (r == col) continue;
      Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                        a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (factor == Rational(0)) continue;
      for (int c = col; c <= nf; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  std::vector<Rational> coords(static_cast<std::size_t>(nf));
  for (int r = 0; r < nf; ++r)
    coords[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(nf)] /
                                          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  return coords;
}

/// True when every coordinate is an integer <= 0.
[[nodiscard]] inline bool all_nonpositive_integers(const std::vector<Rational>& coords) {
  for (const auto& c : coords) {
    if (c.denominator() != 1) return false;
    if (c.numerator() > 0) return false;
  }
  return true;
}

}  // namespace affcrys
