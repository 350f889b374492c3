#pragma once

// Independent reference models used only by the test suite.
//
// Everything in this header is deliberately written from scratch against the
// bare combinatorial definitions (integer vectors, explicit index shifts,
// recursive tensor rule) and must NOT include any library header.  The test
// suite compares library output against these models; keeping the two code
// paths disjoint is what gives the comparison teeth.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;  // (x_1, ..., x_n), 0-based storage

// Label i in {0,...,n-1} acts "from x_i to x_{i+1}" with x_0 == x_n.
inline int from_pos(int n, int i) { return i == 0 ? n - 1 : i - 1; }
inline int to_pos(int /*n*/, int i) { return i == 0 ? 0 : i; }

// ---- vector statistics (shared by the KR, coherent, and column models) ----

inline long long eps(const Vec& x, int i) { return x[to_pos((int)x.size(), i)]; }
inline long long phi(const Vec& x, int i) { return x[from_pos((int)x.size(), i)]; }

inline Vec weight(const Vec& x) {  // Lambda-coefficients, index i = phi_i - eps_i
  const int n = (int)x.size();
  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = phi(x, i) - eps(x, i);
  return w;
}

// ---- KR model B^{1,s}: nonnegative entries, fixed sum ----

inline std::optional<Vec> kr_f(Vec x, int i) {
  const int n = (int)x.size();
  const int a = from_pos(n, i), b = to_pos(n, i);
  if (x[a] == 0) return std::nullopt;
  --x[a];
  ++x[b];
  return x;
}

inline std::optional<Vec> kr_e(Vec x, int i) {
  const int n = (int)x.size();
  const int a = from_pos(n, i), b = to_pos(n, i);
  if (x[b] == 0) return std::nullopt;
  --x[b];
  ++x[a];
  return x;
}

// ---- coherent model: same shifts, no guards ----

inline Vec coh_f(Vec x, int i) {
  const int n = (int)x.size();
  --x[from_pos(n, i)];
  ++x[to_pos(n, i)];
  return x;
}

inline Vec coh_e(Vec x, int i) {
  const int n = (int)x.size();
  ++x[from_pos(n, i)];
  --x[to_pos(n, i)];
  return x;
}

// ---- column model: 0/1 entries, ops guarded to stay 0/1 ----

inline std::optional<Vec> col_f(Vec x, int i) {
  const int n = (int)x.size();
  const int a = from_pos(n, i), b = to_pos(n, i);
  if (x[a] != 1 || x[b] != 0) return std::nullopt;
  x[a] = 0;
  x[b] = 1;
  return x;
}

inline std::optional<Vec> col_e(Vec x, int i) {
  const int n = (int)x.size();
  const int a = from_pos(n, i), b = to_pos(n, i);
  if (x[b] != 1 || x[a] != 0) return std::nullopt;
  x[b] = 0;
  x[a] = 1;
  return x;
}

// ---- exhaustive element sets ----

inline void compositions_rec(int n, long long s, Vec& cur, std::vector<Vec>& out) {
  if ((int)cur.size() == n - 1) {
    cur.push_back(s);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long long v = 0; v <= s; ++v) {
    cur.push_back(v);
    compositions_rec(n, s - v, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Vec> enumerate_kr(int n, long long s) {
  std::vector<Vec> out;
  Vec cur;
  compositions_rec(n, s, cur, out);
  return out;
}

inline std::vector<Vec> enumerate_col(int n, int r) {
  std::vector<Vec> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    Vec x(n);
    for (int j = 0; j < n; ++j) x[j] = (mask >> j) & 1u;
    out.push_back(x);
  }
  return out;
}

// ---- N-fold tensor product of KR vectors, by the recursive rule ----
//
// A TList {p_0, ..., p_{m-1}} stands for the left fold
// ((p_0 (x) p_1) (x) p_2) ... ; in each pairing the LEFT part plays the b_2
// role of the rule: e acts left iff eps(left) > phi(right), f acts left iff
// eps(left) >= phi(right);
//   eps_i(L(x)R) = max(eps_i(R), eps_i(L) - <h_i, wt(R)>)
//   phi_i(L(x)R) = max(phi_i(L), phi_i(R) + <h_i, wt(L)>).

using TList = std::vector<Vec>;

inline long long t_eps(const TList& t, int m, int i);
inline long long t_phi(const TList& t, int m, int i);

inline Vec t_weight(const TList& t, int m) {
  Vec w(t.at(0).size(), 0);
  for (int j = 0; j < m; ++j) {
    Vec wj = weight(t[j]);
    for (size_t a = 0; a < w.size(); ++a) w[a] += wj[a];
  }
  return w;
}

inline long long t_eps(const TList& t, int m, int i) {
  if (m == 1) return eps(t[0], i);
  const long long right = eps(t[m - 1], i);
  const long long left = t_eps(t, m - 1, i) - weight(t[m - 1])[i];
  return right > left ? right : left;
}

inline long long t_phi(const TList& t, int m, int i) {
  if (m == 1) return phi(t[0], i);
  const long long left = t_phi(t, m - 1, i);
  const long long right = phi(t[m - 1], i) + t_weight(t, m - 1)[i];
  return left > right ? left : right;
}

inline std::optional<TList> t_f(TList t, int i) { // acts on the whole list
  // locate the acting part by unwinding the left fold
  int m = (int)t.size();
  std::optional<Vec> img;
  int act = -1;
  // Walk down: at span length m, decide left (first m-1 parts) vs right (part m-1).
  int span = m;
  while (span > 1) {
    if (t_eps(t, span - 1, i) >= phi(t[span - 1], i)) {
      span -= 1;  // recurse into the left part
    } else {
      act = span - 1;
      break;
    }
  }
  if (act < 0) act = 0;  // span collapsed to the single leftmost part
  img = kr_f(t[act], i);
  if (!img) return std::nullopt;
  t[act] = *img;
  return t;
}

inline std::optional<TList> t_e(TList t, int i) {
  int m = (int)t.size();
  int act = -1;
  int span = m;
  while (span > 1) {
    if (t_eps(t, span - 1, i) > phi(t[span - 1], i)) {
      span -= 1;
    } else {
      act = span - 1;
      break;
    }
  }
  if (act < 0) act = 0;
  std::optional<Vec> img = kr_e(t[act], i);
  if (!img) return std::nullopt;
  t[act] = *img;
  return t;
}

}  // namespace oracle
