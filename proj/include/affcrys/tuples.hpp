#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "affcrys/errors.hpp"
#include "affcrys/params.hpp"
#include "affcrys/weight.hpp"

namespace affcrys {

/**
 * @brief The three exponent-tuple realizations:
 *  - KR: nonnegative tuples summing to s (one-row model), optionally carrying
 *    an affine degree;
 *  - Coherent: integer tuples summing to 0 (the coherent limit of the above);
 *  - Column: 0/1 tuples summing to r (one-column model).
 */
enum class TupleVariant { KR, Coherent, Column };

struct TupleElement {
  TupleVariant variant = TupleVariant::KR;
  std::vector<long long> xs;
  long long s_or_r = 0;
  std::optional<long long> degree;

  friend bool operator==(const TupleElement&, const TupleElement&) = default;
  friend bool operator<(const TupleElement& a, const TupleElement& b) {
    if (a.variant != b.variant) return a.variant < b.variant;
    if (a.xs != b.xs) return a.xs < b.xs;
    if (a.s_or_r != b.s_or_r) return a.s_or_r < b.s_or_r;
    return a.degree < b.degree;
  }
};

namespace detail {

/// Position whose entry f_i lowers (and e_i raises): the "source" coordinate of direction i.
[[nodiscard]] inline std::size_t from_pos(int n, int i) {
  return static_cast<std::size_t>(i == 0 ? n - 1 : i - 1);
}

/// Position whose entry f_i raises (and e_i lowers): the "target" coordinate of direction i.
[[nodiscard]] inline std::size_t to_pos(int n, int i) {
  (void)n;
  return static_cast<std::size_t>(i == 0 ? 0 : i);
}

}  // namespace detail

inline void validate(const CrystalParams& p, const TupleElement& t) {
  if (t.xs.size() != static_cast<std::size_t>(p.n)) throw CrystalError("tuple length must equal n");
  long long sum = 0;
  for (long long v : t.xs) sum = detail::chk_add(sum, v);
  switch (t.variant) {
    case TupleVariant::KR:
      if (t.s_or_r < 1) throw CrystalError("one-row tuples need s >= 1");
      for (long long v : t.xs)
        if (v < 0) throw CrystalError("one-row tuple entries must be nonnegative");
      if (sum != t.s_or_r) throw CrystalError("one-row tuple entries must sum to s");
      break;
    case TupleVariant::Coherent:
      if (t.degree) throw CrystalError("coherent tuples carry no degree");
      if (sum != 0) throw CrystalError("coherent tuple entries must sum to zero");
      break;
    case TupleVariant::Column:
      if (t.degree) throw CrystalError("one-column tuples carry no degree");
      if (t.s_or_r < 1 || t.s_or_r >= p.n) throw CrystalError("one-column tuples need 1 <= r <= n-1");
      for (long long v : t.xs)
        if (v != 0 && v != 1) throw CrystalError("one-column tuple entries must be 0 or 1");
      if (sum != t.s_or_r) throw CrystalError("one-column tuple entries must sum to r");
      break;
  }
}

[[nodiscard]] inline TupleElement make_kr(const CrystalParams& p, long long s, std::vector<long long> xs,
                                          std::optional<long long> degree = std::nullopt) {
  TupleElement t{TupleVariant::KR, std::move(xs), s, degree};
  validate(p, t);
  return t;
}

[[nodiscard]] inline TupleElement make_coherent(const CrystalParams& p, std::vector<long long> xs) {
  TupleElement t{TupleVariant::Coherent, std::move(xs), 0, std::nullopt};
  validate(p, t);
  return t;
}

[[nodiscard]] inline TupleElement make_column(const CrystalParams& p, long long r, std::vector<long long> xs) {
  TupleElement t{TupleVariant::Column, std::move(xs), r, std::nullopt};
  validate(p, t);
  return t;
}

/// Highest-weight one-row tuple (s, 0, ..., 0).
[[nodiscard]] inline TupleElement kr_highest(const CrystalParams& p, long long s) {
  std::vector<long long> xs(static_cast<std::size_t>(p.n), 0);
  xs[0] = s;
  return make_kr(p, s, std::move(xs));
}

/// eps_i = entry at the target coordinate of direction i (all variants).
[[nodiscard]] inline long long tuple_eps(const CrystalParams& p, const TupleElement& t, int i) {
  return t.xs[detail::to_pos(p.n, i)];
}

/// phi_i = entry at the source coordinate of direction i (all variants).
[[nodiscard]] inline long long tuple_phi(const CrystalParams& p, const TupleElement& t, int i) {
  return t.xs[detail::from_pos(p.n, i)];
}

/// lambda_i = phi_i - eps_i; the degree (if any) is the null-root coefficient.
[[nodiscard]] inline Weight tuple_weight(const CrystalParams& p, const TupleElement& t) {
  Weight w = zero_weight(p.n);
  for (int i = 0; i < p.n; ++i)
    w.lambda[static_cast<std::size_t>(i)] =
        detail::chk_add(tuple_phi(p, t, i), detail::chk_mul(-1, tuple_eps(p, t, i)));
  w.delta = t.degree.value_or(0);
  return w;
}

[[nodiscard]] inline std::optional<TupleElement> kr_f(const CrystalParams& p, const TupleElement& t, int i) {
  std::size_t a = detail::from_pos(p.n, i), b = detail::to_pos(p.n, i);
  if (t.xs[a] == 0) return std::nullopt;
  TupleElement r = t;
  --r.xs[a];
  ++r.xs[b];
  if (r.degree && i == 0) --*r.degree;
  return r;
}

[[nodiscard]] inline std::optional<TupleElement> kr_e(const CrystalParams& p, const TupleElement& t, int i) {
  std::size_t a = detail::from_pos(p.n, i), b = detail::to_pos(p.n, i);
  if (t.xs[b] == 0) return std::nullopt;
  TupleElement r = t;
  ++r.xs[a];
  --r.xs[b];
  if (r.degree && i == 0) ++*r.degree;
  return r;
}

[[nodiscard]] inline TupleElement coh_tuple_f(const CrystalParams& p, const TupleElement& t, int i) {
  TupleElement r = t;
  --r.xs[detail::from_pos(p.n, i)];
  ++r.xs[detail::to_pos(p.n, i)];
  return r;
}

[[nodiscard]] inline TupleElement coh_tuple_e(const CrystalParams& p, const TupleElement& t, int i) {
  TupleElement r = t;
  ++r.xs[detail::from_pos(p.n, i)];
  --r.xs[detail::to_pos(p.n, i)];
  return r;
}

[[nodiscard]] inline std::optional<TupleElement> col_f(const CrystalParams& p, const TupleElement& t, int i) {
  std::size_t a = detail::from_pos(p.n, i), b = detail::to_pos(p.n, i);
  if (!(t.xs[a] == 1 && t.xs[b] == 0)) return std::nullopt;
  TupleElement r = t;
  r.xs[a] = 0;
  r.xs[b] = 1;
  return r;
}

[[nodiscard]] inline std::optional<TupleElement> col_e(const CrystalParams& p, const TupleElement& t, int i) {
  std::size_t a = detail::from_pos(p.n, i), b = detail::to_pos(p.n, i);
  if (!(t.xs[b] == 1 && t.xs[a] == 0)) return std::nullopt;
  TupleElement r = t;
  r.xs[b] = 0;
  r.xs[a] = 1;
  return r;
}

/// Attach an affine degree to a one-row tuple; thereafter e_0 raises and f_0 lowers it.
[[nodiscard]] inline TupleElement affinize(const CrystalParams& p, const TupleElement& t, long long k) {
  if (t.variant != TupleVariant::KR) throw CrystalError("affinize applies to one-row tuples");
  TupleElement r = t;
  r.degree = k;
  validate(p, r);
  return r;
}

/// Cyclic promotion: (x_1, ..., x_n) -> (x_n, x_1, ..., x_{n-1}).
[[nodiscard]] inline TupleElement promotion(const CrystalParams& p, const TupleElement& t) {
  TupleElement r = t;
  std::size_t n = t.xs.size();
  for (std::size_t i = 0; i < n; ++i) r.xs[(i + 1) % n] = t.xs[i];
  (void)p;
  return r;
}

[[nodiscard]] inline TupleElement promotion_inv(const CrystalParams& p, const TupleElement& t) {
  TupleElement r = t;
  std::size_t n = t.xs.size();
  for (std::size_t i = 0; i < n; ++i) r.xs[i] = t.xs[(i + 1) % n];
  (void)p;
  return r;
}

[[nodiscard]] inline std::string display(const TupleElement& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.xs[i]);
  }
  s += ")";
  if (t.degree) s += "@" + std::to_string(*t.degree);
  return s;
}

[[nodiscard]] inline std::string variant_name(TupleVariant v) {
  switch (v) {
    case TupleVariant::KR: return "kr";
    case TupleVariant::Coherent: return "coherent";
    case TupleVariant::Column: return "column";
  }
  throw CrystalError("unknown tuple variant");
}

[[nodiscard]] inline nlohmann::json tuple_to_json(const TupleElement& t) {
  nlohmann::json j{{"s_or_r", t.s_or_r}, {"variant", variant_name(t.variant)}, {"xs", t.xs}};
  if (t.degree) j["degree"] = *t.degree;
  return j;
}

[[nodiscard]] inline TupleElement tuple_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant") || !j.contains("xs") || !j.contains("s_or_r"))
    throw CrystalError("tuple JSON must carry variant, xs and s_or_r");
  TupleElement t;
  std::string v = j.at("variant").get<std::string>();
  if (v == "kr")
    t.variant = TupleVariant::KR;
  else if (v == "coherent")
    t.variant = TupleVariant::Coherent;
  else if (v == "column")
    t.variant = TupleVariant::Column;
  else
    throw CrystalError("unknown tuple variant: " + v);
  t.xs = j.at("xs").get<std::vector<long long>>();
  t.s_or_r = j.at("s_or_r").get<long long>();
  if (j.contains("degree")) t.degree = j.at("degree").get<long long>();
  return t;
}

}  // namespace affcrys
