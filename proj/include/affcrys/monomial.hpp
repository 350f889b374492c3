#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "affcrys/errors.hpp"
#include "affcrys/params.hpp"
#include "affcrys/weight.hpp"

namespace affcrys {

/**
 * @brief A Laurent monomial in the commuting variables Y_{i,k}, i a Dynkin
 *        label and k an integer.
 *
 * Stored as a sorted map from (k, i) to a nonzero exponent, so iteration
 * order, equality, display and serialization are all canonical.  The empty
 * map is the identity monomial.
 */
struct Monomial {
  using Key = std::pair<long long, int>;  // (k, i)
  std::map<Key, long long> factors;

  [[nodiscard]] bool is_one() const { return factors.empty(); }

  [[nodiscard]] long long exponent(int i, long long k) const {
    auto it = factors.find({k, i});
    return it == factors.end() ? 0 : it->second;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors < b.factors; }
};

[[nodiscard]] inline Monomial mono_one() { return Monomial{}; }

/// The variable Y_{i,k} raised to exponent e.
[[nodiscard]] inline Monomial mono_y(int i, long long k, long long e = 1) {
  Monomial m;
  if (e != 0) m.factors[{k, i}] = e;
  return m;
}

[[nodiscard]] inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [key, e] : b.factors) {
    long long v = detail::chk_add(r.factors.count(key) ? r.factors[key] : 0, e);
    if (v == 0)
      r.factors.erase(key);
    else
      r.factors[key] = v;
  }
  return r;
}

[[nodiscard]] inline Monomial mono_pow(const Monomial& m, long long e) {
  Monomial r;
  if (e == 0) return r;
  for (const auto& [key, v] : m.factors) r.factors[key] = detail::chk_mul(v, e);
  return r;
}

/// Shift every second index by j: Y_{i,k} -> Y_{i,k+j}.
[[nodiscard]] inline Monomial tau(const Monomial& m, long long j) {
  Monomial r;
  for (const auto& [key, e] : m.factors) r.factors[{detail::chk_add(key.first, j), key.second}] = e;
  return r;
}

/**
 * @brief Weight of a monomial: lambda_i = sum of exponents of Y_{i,k} over k.
 *        Null-root coefficient 0 (monomial weights live in the classical quotient).
 */
[[nodiscard]] inline Weight mono_weight(const CrystalParams& p, const Monomial& m) {
  Weight w = zero_weight(p.n);
  for (const auto& [key, e] : m.factors) {
    int i = key.second;
    if (i < 0 || i >= p.n) throw CrystalError("monomial carries a Dynkin label outside 0..n-1");
    w.lambda[static_cast<std::size_t>(i)] = detail::chk_add(w.lambda[static_cast<std::size_t>(i)], e);
  }
  return w;
}

/// Highest-weight seed Y_lambda = prod_i Y_{i,0}^{lambda_i} for dominant lambda with delta = 0.
[[nodiscard]] inline Monomial y_lambda(const CrystalParams& p, const Weight& w) {
  if (w.lambda.size() != static_cast<std::size_t>(p.n)) throw InvalidParams("y_lambda: rank mismatch");
  if (!is_dominant(w)) throw InvalidParams("y_lambda requires a dominant weight");
  if (w.delta != 0) throw InvalidParams("y_lambda requires null-root coefficient 0");
  Monomial m;
  for (int i = 0; i < p.n; ++i) {
    long long e = w.lambda[static_cast<std::size_t>(i)];
    if (e != 0) m.factors[{0, i}] = e;
  }
  return m;
}

[[nodiscard]] inline std::string display(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [key, e] : m.factors) {
    if (!s.empty()) s += "*";
    s += "Y(" + std::to_string(key.second) + "," + std::to_string(key.first) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

/// {"factors": [[i, k, e], ...]} ordered by (k, i).
[[nodiscard]] inline nlohmann::json mono_to_json(const Monomial& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, e] : m.factors) arr.push_back({key.second, key.first, e});
  return nlohmann::json{{"factors", arr}};
}

[[nodiscard]] inline Monomial mono_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("factors") || !j.at("factors").is_array())
    throw CrystalError("monomial JSON must carry a factors array");
  Monomial m;
  for (const auto& f : j.at("factors")) {
    if (!f.is_array() || f.size() != 3) throw CrystalError("monomial factor must be [i, k, e]");
    int i = f.at(0).get<int>();
    long long k = f.at(1).get<long long>();
    long long e = f.at(2).get<long long>();
    m = mono_mul(m, mono_y(i, k, e));
  }
  return m;
}

}  // namespace affcrys
