#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "affcrys/graph.hpp"

namespace affcrys {

namespace detail {

/// Discrete invariant of a vertex: statistics, classical weight, boundary flag.
[[nodiscard]] inline std::string vertex_signature(const CrystalGraph& g, int v) {
  std::string s;
  for (int i = 0; i < g.rank(); ++i) s += std::to_string(g.eps(v, i)) + ",";
  s += "|";
  for (int i = 0; i < g.rank(); ++i) s += std::to_string(g.phi(v, i)) + ",";
  s += "|";
  for (long long l : g.weight(v).lambda) s += std::to_string(l) + ",";
  s += "|";
  s += g.is_boundary(v) ? "b" : ".";
  return s;
}

[[nodiscard]] inline std::vector<std::vector<int>> weak_components(const CrystalGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < g.size(); ++v) {
    if (comp[static_cast<std::size_t>(v)] != -1) continue;
    int c = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<int> q;
    q.push(v);
    comp[static_cast<std::size_t>(v)] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      members[static_cast<std::size_t>(c)].push_back(u);
      for (int i = 0; i < g.rank(); ++i) {
        for (int w : {g.f_target(u, i), g.e_target(u, i)}) {
          if (w != -1 && comp[static_cast<std::size_t>(w)] == -1) {
            comp[static_cast<std::size_t>(w)] = c;
            q.push(w);
          }
        }
      }
    }
  }
  return members;
}

/**
 * @brief Try to extend root_a -> root_b to an edge-and-signature preserving
 *        bijection of their components by parallel breadth-first search.
 *        Returns the (a-vertex, b-vertex) pairs on success.
 */
[[nodiscard]] inline std::optional<std::vector<std::pair<int, int>>> anchored_match(
    const CrystalGraph& a, const CrystalGraph& b, const std::vector<std::string>& siga,
    const std::vector<std::string>& sigb, int root_a, int root_b) {
  if (siga[static_cast<std::size_t>(root_a)] != sigb[static_cast<std::size_t>(root_b)]) return std::nullopt;
  std::map<int, int> fwd, bwd;
  std::queue<int> q;
  fwd[root_a] = root_b;
  bwd[root_b] = root_a;
  q.push(root_a);
  std::vector<std::pair<int, int>> pairs{{root_a, root_b}};
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    int w = fwd[u];
    for (int i = 0; i < a.rank(); ++i) {
      const std::pair<int, int> steps[2] = {{a.f_target(u, i), b.f_target(w, i)},
                                            {a.e_target(u, i), b.e_target(w, i)}};
      for (const auto& [ta, tb] : steps) {
        if ((ta == -1) != (tb == -1)) return std::nullopt;
        if (ta == -1) continue;
        auto it = fwd.find(ta);
        if (it != fwd.end()) {
          if (it->second != tb) return std::nullopt;
          continue;
        }
        if (bwd.count(tb)) return std::nullopt;
        if (siga[static_cast<std::size_t>(ta)] != sigb[static_cast<std::size_t>(tb)]) return std::nullopt;
        fwd[ta] = tb;
        bwd[tb] = ta;
        pairs.emplace_back(ta, tb);
        q.push(ta);
      }
    }
  }
  return pairs;
}

}  // namespace detail

/**
 * @brief Decide whether two cached graphs are isomorphic as labeled graphs
 *        with statistics (weights compared modulo the null root, elements
 *        ignored), and if so return one bijection as a vector mapping a-ids
 *        to b-ids.
 *
 * Components are grouped by size and signature multiset; within a group,
 * every a-component is anchored at its least vertex and candidate b-anchors
 * are tried in ascending order, with backtracking over the component
 * assignment.  The procedure is deterministic.
 */
[[nodiscard]] inline std::optional<std::vector<int>> is_isomorphic(const CrystalGraph& a, const CrystalGraph& b) {
  if (a.params != b.params) return std::nullopt;
  if (a.size() != b.size()) return std::nullopt;
  for (int i = 0; i < a.rank(); ++i)
    if (a.edge_count(i) != b.edge_count(i)) return std::nullopt;

  std::vector<std::string> siga(static_cast<std::size_t>(a.size())), sigb(static_cast<std::size_t>(b.size()));
  for (int v = 0; v < a.size(); ++v) siga[static_cast<std::size_t>(v)] = detail::vertex_signature(a, v);
  for (int v = 0; v < b.size(); ++v) sigb[static_cast<std::size_t>(v)] = detail::vertex_signature(b, v);

  auto comps_a = detail::weak_components(a);
  auto comps_b = detail::weak_components(b);
  if (comps_a.size() != comps_b.size()) return std::nullopt;

  auto comp_key = [](const std::vector<int>& comp, const std::vector<std::string>& sigs) {
    std::vector<std::string> ss;
    ss.reserve(comp.size());
    for (int v : comp) ss.push_back(sigs[static_cast<std::size_t>(v)]);
    std::sort(ss.begin(), ss.end());
    std::string key = std::to_string(comp.size()) + "#";
    for (const auto& s : ss) key += s + ";";
    return key;
  };

  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (std::size_t c = 0; c < comps_a.size(); ++c) groups[comp_key(comps_a[c], siga)].first.push_back(static_cast<int>(c));
  for (std::size_t c = 0; c < comps_b.size(); ++c) groups[comp_key(comps_b[c], sigb)].second.push_back(static_cast<int>(c));

  std::vector<int> result(static_cast<std::size_t>(a.size()), -1);
  for (auto& [key, grp] : groups) {
    auto& [ca, cb] = grp;
    if (ca.size() != cb.size()) return std::nullopt;
    // Perfect matching over the pair-feasibility relation, with memoized probes.
    std::map<std::pair<int, int>, std::optional<std::vector<std::pair<int, int>>>> memo;
    auto feasible = [&](int ia, int ib) -> const std::optional<std::vector<std::pair<int, int>>>& {
      auto it = memo.find({ia, ib});
      if (it != memo.end()) return it->second;
      int root_a = *std::min_element(comps_a[static_cast<std::size_t>(ia)].begin(),
                                     comps_a[static_cast<std::size_t>(ia)].end());
      std::optional<std::vector<std::pair<int, int>>> found;
      std::vector<int> cand = comps_b[static_cast<std::size_t>(ib)];
      std::sort(cand.begin(), cand.end());
      for (int rb : cand) {
        found = detail::anchored_match(a, b, siga, sigb, root_a, rb);
        if (found) break;
      }
      return memo.emplace(std::pair<int, int>{ia, ib}, std::move(found)).first->second;
    };
    std::vector<char> used(cb.size(), 0);
    std::vector<int> chosen(ca.size(), -1);
    auto assign = [&](auto&& self, std::size_t pos) -> bool {
      if (pos == ca.size()) return true;
      for (std::size_t jb = 0; jb < cb.size(); ++jb) {
        if (used[jb]) continue;
        if (!feasible(ca[pos], cb[jb])) continue;
        used[jb] = 1;
        chosen[pos] = static_cast<int>(jb);
        if (self(self, pos + 1)) return true;
        used[jb] = 0;
        chosen[pos] = -1;
      }
      return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    for (std::size_t pos = 0; pos < ca.size(); ++pos) {
      const auto& pairs = feasible(ca[pos], cb[static_cast<std::size_t>(chosen[pos])]);
      for (const auto& [va, vb] : *pairs) result[static_cast<std::size_t>(va)] = vb;
    }
  }
  for (int v : result)
    if (v == -1) return std::nullopt;
  return result;
}

}  // namespace affcrys
