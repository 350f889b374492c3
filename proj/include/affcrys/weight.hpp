#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "affcrys/errors.hpp"
#include "affcrys/params.hpp"

namespace affcrys {

/**
 * @brief An affine weight in the basis of fundamental weights Lambda_0..Lambda_{n-1},
 *        together with a null-root coefficient.
 *
 * `lambda[i]` is the coefficient of Lambda_i; `delta` is the coefficient of
 * the null root.  Most comparisons in this library happen at the level of the
 * quotient that forgets delta (see classical_equal); full equality keeps it.
 */
struct Weight {
  std::vector<long long> lambda;
  long long delta = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
};

[[nodiscard]] inline long long level(const Weight& w) {
  long long s = 0;
  for (long long v : w.lambda) s = detail::chk_add(s, v);
  return s;
}

/// Pairing <h_i, w> = lambda_i.
[[nodiscard]] inline long long pairing(int i, const Weight& w) {
  if (i < 0 || static_cast<std::size_t>(i) >= w.lambda.size())
    throw CrystalError("pairing: index out of range");
  return w.lambda[static_cast<std::size_t>(i)];
}

/// Equality modulo the null root (coefficients of Lambda_i only).
[[nodiscard]] inline bool classical_equal(const Weight& a, const Weight& b) {
  return a.lambda == b.lambda;
}

[[nodiscard]] inline Weight add(const Weight& a, const Weight& b) {
  if (a.lambda.size() != b.lambda.size()) throw CrystalError("weight addition: rank mismatch");
  Weight r = a;
  for (std::size_t i = 0; i < r.lambda.size(); ++i) r.lambda[i] = detail::chk_add(r.lambda[i], b.lambda[i]);
  r.delta = detail::chk_add(r.delta, b.delta);
  return r;
}

[[nodiscard]] inline Weight sub(const Weight& a, const Weight& b) {
  if (a.lambda.size() != b.lambda.size()) throw CrystalError("weight subtraction: rank mismatch");
  Weight r = a;
  for (std::size_t i = 0; i < r.lambda.size(); ++i) r.lambda[i] = detail::chk_add(r.lambda[i], detail::chk_mul(-1, b.lambda[i]));
  r.delta = detail::chk_add(r.delta, detail::chk_mul(-1, b.delta));
  return r;
}

[[nodiscard]] inline Weight zero_weight(int n) {
  Weight w;
  w.lambda.assign(static_cast<std::size_t>(n), 0);
  return w;
}

[[nodiscard]] inline Weight fundamental_weight(int n, int i) {
  Weight w = zero_weight(n);
  w.lambda.at(static_cast<std::size_t>(i)) = 1;
  return w;
}

[[nodiscard]] inline bool is_dominant(const Weight& w) {
  for (long long v : w.lambda)
    if (v < 0) return false;
  return true;
}

/**
 * @brief Weight of the simple root alpha_i: lambda_j = a_{ji}, and a null-root
 *        contribution of 1 exactly for i = 0 (when with_delta is set).
 */
[[nodiscard]] inline Weight alpha_weight(const CrystalParams& p, int i, bool with_delta = true) {
  Weight w = zero_weight(p.n);
  for (int j = 0; j < p.n; ++j) w.lambda[static_cast<std::size_t>(j)] = p.cartan(j, i);
  if (with_delta && i == 0) w.delta = 1;
  return w;
}

/// Cyclic index rotation: result lambda_i = input lambda_{(i+1) mod n}.  Null root dropped.
[[nodiscard]] inline Weight rotate_weight(const Weight& w) {
  Weight r = zero_weight(static_cast<int>(w.lambda.size()));
  std::size_t n = w.lambda.size();
  for (std::size_t i = 0; i < n; ++i) r.lambda[i] = w.lambda[(i + 1) % n];
  return r;
}

/// All dominant weights of the given level (nonnegative coefficient vectors summing to s), lexicographic.
[[nodiscard]] inline std::vector<Weight> dominant_weights_of_level(int n, long long s) {
  std::vector<Weight> out;
  std::vector<long long> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long long rem) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = rem;
      out.push_back(Weight{cur, 0});
      return;
    }
    for (long long v = 0; v <= rem; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rem - v);
    }
  };
  if (n >= 1 && s >= 0) rec(rec, 0, s);
  return out;
}

[[nodiscard]] inline std::string display(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.lambda[i]);
  }
  s += ")";
  if (w.delta != 0) s += "@" + std::to_string(w.delta);
  return s;
}

[[nodiscard]] inline nlohmann::json weight_to_json(const Weight& w) {
  return nlohmann::json{{"delta", w.delta}, {"lambda", w.lambda}};
}

[[nodiscard]] inline Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("delta"))
    throw CrystalError("weight JSON must carry lambda and delta");
  Weight w;
  w.lambda = j.at("lambda").get<std::vector<long long>>();
  w.delta = j.at("delta").get<long long>();
  return w;
}

}  // namespace affcrys
