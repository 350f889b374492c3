#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/string_ops.hpp"
#include "affcrys/variables.hpp"

namespace affcrys {

/// Statistics of the restricted lowering structure on the nonnegative fragment.
struct DaggerData {
  long long eps = 0;
  long long phi = 0;
  long long k_f = 0;  // least k >= 0 attaining phi; always defined
};

namespace detail {

inline void require_fragment(const Monomial& m) {
  if (!m.is_one() && m.factors.begin()->first.first < 0)
    throw CrystalError("monomial lies outside the nonnegative-index fragment: " + display(m));
}

inline void require_default_orientation(const CrystalParams& p, const char* who) {
  if (!p.is_default_orientation())
    throw InvalidParams(std::string(who) + " is defined for the default orientation only");
}

}  // namespace detail

/**
 * @brief Restricted string data in direction i, with both partial sums taken
 *        over k >= 0 only:
 *        phi = max_{k >= 0} H(k),  eps = -min_{k >= 0} T(k),
 *        k_f = least k >= 0 attaining phi (k_f = 0 when the row is empty).
 *
 * Requires every second index of m to be nonnegative; on that domain
 * phi - eps = <h_i, wt(m)> holds and is re-verified on every call.
 */
[[nodiscard]] inline DaggerData dagger_stats(const CrystalParams& p, const Monomial& m, int i) {
  detail::require_default_orientation(p, "dagger_stats");
  detail::require_fragment(m);
  if (i < 0 || i >= p.n) throw CrystalError("dagger_stats: Dynkin label out of range");
  auto row = detail::row_of(m, i);
  DaggerData dd;
  // Plateau boundaries on [0, +inf): 0 together with the support points.
  std::vector<long long> bounds;
  if (row.empty() || row[0].first > 0) bounds.push_back(0);
  for (const auto& [k, e] : row) bounds.push_back(k);
  std::size_t cnt = row.size();
  std::vector<long long> prefix(bounds.size()), suffix_at(bounds.size());
  {
    std::size_t jr = 0;
    long long acc = 0;
    for (std::size_t b = 0; b < bounds.size(); ++b) {
      while (jr < cnt && row[jr].first <= bounds[b]) acc = detail::chk_add(acc, row[jr++].second);
      prefix[b] = acc;
    }
  }
  {
    std::vector<long long> suffix(cnt + 1, 0);
    for (std::size_t j = cnt; j-- > 0;) suffix[j] = detail::chk_add(suffix[j + 1], row[j].second);
    std::size_t jr = 0;
    for (std::size_t b = 0; b < bounds.size(); ++b) {
      while (jr < cnt && row[jr].first <= bounds[b]) ++jr;
      suffix_at[b] = suffix[jr];
    }
  }
  long long max_h = prefix[0], min_t = suffix_at[0];
  long long arg = bounds[0];
  for (std::size_t b = 0; b < bounds.size(); ++b) {
    if (prefix[b] > max_h) {
      max_h = prefix[b];
      arg = bounds[b];
    }
    if (suffix_at[b] < min_t) min_t = suffix_at[b];
  }
  dd.phi = max_h;
  dd.eps = -min_t;
  dd.k_f = arg;  // first boundary attaining the maximum = least attaining k
  long long lhs = detail::chk_add(dd.phi, detail::chk_mul(-1, dd.eps));
  long long rhs = pairing(i, mono_weight(p, m));
  if (lhs != rhs)
    throw CrystalError("dagger_stats: phi - eps = " + std::to_string(lhs) + " but <h_i, wt> = " +
                       std::to_string(rhs) + " at i = " + std::to_string(i) + " on " + display(m));
  return dd;
}

/**
 * @brief Total lowering operator of the nonnegative fragment:
 *        multiply by A_{i,k}^{-1} at the least k >= 0 maximizing the head sum.
 *        Never absent.
 */
[[nodiscard]] inline Monomial f_dagger(const CrystalParams& p, const Monomial& m, int i) {
  detail::require_default_orientation(p, "f_dagger");
  DaggerData dd = dagger_stats(p, m, i);
  return mono_mul(m, mono_pow(a_monomial(p, i, dd.k_f), -1));
}

}  // namespace affcrys
