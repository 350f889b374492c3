#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/variables.hpp"

namespace affcrys {

/**
 * @brief String data of a monomial in direction i:
 *        eps  = -min_k (sum of row-i exponents at second index > k),
 *        phi  =  max_k (sum of row-i exponents at second index <= k),
 *        k_e  =  largest k attaining the minimum (present iff eps > 0),
 *        k_f  =  smallest k attaining the maximum (present iff phi > 0).
 */
struct StringData {
  long long eps = 0;
  long long phi = 0;
  std::optional<long long> k_e;
  std::optional<long long> k_f;
};

namespace detail {

/// Row-i factors of m as (k, exponent) pairs, ascending in k.
[[nodiscard]] inline std::vector<std::pair<long long, long long>> row_of(const Monomial& m, int i) {
  std::vector<std::pair<long long, long long>> row;
  for (const auto& [key, e] : m.factors)
    if (key.second == i) row.emplace_back(key.first, e);
  return row;
}

}  // namespace detail

/**
 * @brief Compute the string data along direction i.
 *
 * Both partial-sum functions are step functions that only change value at the
 * support points of row i, so they are examined plateau by plateau: the head
 * sum H(k) = sum_{s <= k} is constant on [k_j, k_{j+1}-1], zero left of the
 * support and equal to the row sum to the right; the tail sum T(k) =
 * sum_{s > k} mirrors this.  H is accumulated by prefix sums and T by suffix
 * sums, and the two resulting descriptions of the argmax set (via T = -eps
 * and via H = phi) are cross-checked against each other.
 */
[[nodiscard]] inline StringData string_data(const CrystalParams& p, const Monomial& m, int i) {
  if (i < 0 || i >= p.n) throw CrystalError("string_data: Dynkin label out of range");
  auto row = detail::row_of(m, i);
  StringData sd;
  if (row.empty()) return sd;
  std::size_t cnt = row.size();

  // H-plateaus: (start, end, value); start of the leading plateau is treated as -infinity
  // via has_start = false, end of the trailing plateau as +infinity via has_end = false.
  struct Plateau {
    bool has_start = true, has_end = true;
    long long start = 0, end = 0, value = 0;
  };
  std::vector<Plateau> hp, tp;
  hp.push_back({false, true, 0, row[0].first - 1, 0});
  long long acc = 0;
  for (std::size_t j = 0; j < cnt; ++j) {
    acc = detail::chk_add(acc, row[j].second);
    Plateau pl;
    pl.start = row[j].first;
    pl.value = acc;
    if (j + 1 < cnt)
      pl.end = row[j + 1].first - 1;
    else
      pl.has_end = false;
    hp.push_back(pl);
  }
  // T-plateaus on the same subdivision, values from suffix sums.
  std::vector<long long> suffix(cnt + 1, 0);
  for (std::size_t j = cnt; j-- > 0;) suffix[j] = detail::chk_add(suffix[j + 1], row[j].second);
  tp.push_back({false, true, 0, row[0].first - 1, suffix[0]});
  for (std::size_t j = 0; j < cnt; ++j) {
    Plateau pl;
    pl.start = row[j].first;
    pl.value = suffix[j + 1];
    if (j + 1 < cnt)
      pl.end = row[j + 1].first - 1;
    else
      pl.has_end = false;
    tp.push_back(pl);
  }

  long long min_t = tp[0].value, max_h = hp[0].value;
  for (const auto& pl : tp)
    if (pl.value < min_t) min_t = pl.value;
  for (const auto& pl : hp)
    if (pl.value > max_h) max_h = pl.value;
  sd.eps = -min_t;
  sd.phi = max_h;

  if (sd.eps > 0) {
    // Largest k with T(k) = -eps; the trailing plateau has T = 0 != -eps, so
    // every attaining plateau has a finite right end.
    std::optional<long long> ke;
    for (const auto& pl : tp)
      if (pl.value == min_t && pl.has_end)
        if (!ke || pl.end > *ke) ke = pl.end;
    // Cross-check through the head sums: H = phi on exactly the same set.
    std::optional<long long> ke2;
    for (const auto& pl : hp)
      if (pl.value == max_h && pl.has_end)
        if (!ke2 || pl.end > *ke2) ke2 = pl.end;
    if (!ke || ke != ke2) throw CrystalError("string_data: argmax characterizations disagree");
    sd.k_e = ke;
  }
  if (sd.phi > 0) {
    // Smallest k with H(k) = phi; the leading plateau has H = 0 < phi, so
    // every attaining plateau has a finite left start.
    std::optional<long long> kf;
    for (const auto& pl : hp)
      if (pl.value == max_h && pl.has_start)
        if (!kf || pl.start < *kf) kf = pl.start;
    std::optional<long long> kf2;
    for (const auto& pl : tp)
      if (pl.value == min_t && pl.has_start)
        if (!kf2 || pl.start < *kf2) kf2 = pl.start;
    if (!kf || kf != kf2) throw CrystalError("string_data: argmin characterizations disagree");
    sd.k_f = kf;
  }
  return sd;
}

/// Raising operator: multiply by A_{i,k_e}; absent iff eps = 0.
[[nodiscard]] inline std::optional<Monomial> e_std(const CrystalParams& p, const Monomial& m, int i) {
  StringData sd = string_data(p, m, i);
  if (sd.eps == 0) return std::nullopt;
  return mono_mul(m, a_monomial(p, i, *sd.k_e));
}

/// Lowering operator: multiply by A_{i,k_f}^{-1}; absent iff phi = 0.
[[nodiscard]] inline std::optional<Monomial> f_std(const CrystalParams& p, const Monomial& m, int i) {
  StringData sd = string_data(p, m, i);
  if (sd.phi == 0) return std::nullopt;
  return mono_mul(m, mono_pow(a_monomial(p, i, *sd.k_f), -1));
}

}  // namespace affcrys
