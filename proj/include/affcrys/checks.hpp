#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "affcrys/classical.hpp"
#include "affcrys/errors.hpp"
#include "affcrys/graph.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/weight.hpp"

namespace affcrys {

struct CheckReport {
  bool ok = true;
  std::vector<std::string> messages;

  void fail(std::string msg) {
    ok = false;
    messages.push_back(std::move(msg));
  }
  void note(std::string msg) { messages.push_back(std::move(msg)); }
};

/**
 * @brief Verify the crystal axioms on a cached graph:
 *  - phi_i - eps_i = <h_i, wt> at every vertex;
 *  - along every i-edge u -> v: eps_i rises by 1, phi_i falls by 1, the weight
 *    falls by alpha_i (per-coordinate Cartan column, and the null-root
 *    coordinate by 1 exactly for i = 0 when the graph tracks it);
 *  - mutual inverseness and per-label in/out uniqueness hold structurally in
 *    the edge arrays;
 *  - local finiteness of the statistics is immediate for finite data.
 */
[[nodiscard]] inline CheckReport check_axioms(const CrystalGraph& g) {
  CheckReport rep;
  const CrystalParams& p = g.params;
  for (int v = 0; v < g.size(); ++v) {
    for (int i = 0; i < p.n; ++i) {
      long long diff = detail::chk_add(g.phi(v, i), detail::chk_mul(-1, g.eps(v, i)));
      if (diff != pairing(i, g.weight(v))) {
        rep.fail("vertex " + std::to_string(v) + ", label " + std::to_string(i) +
                 ": phi - eps != <h_i, wt>");
      }
    }
  }
  for (const auto& e : g.edges()) {
    int u = e[0], i = e[1], v = e[2];
    if (g.eps(v, i) != detail::chk_add(g.eps(u, i), 1))
      rep.fail("edge " + std::to_string(u) + " -" + std::to_string(i) + "-> " + std::to_string(v) +
               ": eps does not rise by 1");
    if (g.phi(v, i) != detail::chk_add(g.phi(u, i), -1))
      rep.fail("edge " + std::to_string(u) + " -" + std::to_string(i) + "-> " + std::to_string(v) +
               ": phi does not fall by 1");
    for (int j = 0; j < p.n; ++j) {
      long long expect = detail::chk_add(pairing(j, g.weight(u)), detail::chk_mul(-1, p.cartan(j, i)));
      if (pairing(j, g.weight(v)) != expect)
        rep.fail("edge " + std::to_string(u) + " -" + std::to_string(i) + "-> " + std::to_string(v) +
                 ": weight does not fall by the simple root (coordinate " + std::to_string(j) + ")");
    }
    if (g.tracks_delta) {
      long long expect = detail::chk_add(g.weight(u).delta, i == 0 ? -1 : 0);
      if (g.weight(v).delta != expect)
        rep.fail("edge " + std::to_string(u) + " -" + std::to_string(i) + "-> " + std::to_string(v) +
                 ": null-root coordinate is wrong");
    }
  }
  rep.note("in/out uniqueness per label is structural in the edge arrays");
  rep.note("local finiteness is immediate: all cached statistics are finite");
  return rep;
}

/**
 * @brief Verify seminormality on a complete finite graph: eps_i equals the
 *        length of the raising chain and phi_i the length of the lowering
 *        chain at every vertex.  Fails on graphs with boundary vertices,
 *        where chain lengths are not faithful.
 */
[[nodiscard]] inline CheckReport check_regular(const CrystalGraph& g) {
  CheckReport rep;
  if (g.has_boundary()) {
    rep.fail("graph has boundary vertices; chain lengths are not meaningful");
    return rep;
  }
  long long cap = g.size() + 1;
  for (int v = 0; v < g.size(); ++v) {
    for (int i = 0; i < g.rank(); ++i) {
      long long up = 0;
      for (int u = g.e_target(v, i); u != -1; u = g.e_target(u, i)) {
        if (++up > cap) {
          rep.fail("raising chain from vertex " + std::to_string(v) + " label " + std::to_string(i) +
                   " does not terminate");
          break;
        }
      }
      long long down = 0;
      for (int u = g.f_target(v, i); u != -1; u = g.f_target(u, i)) {
        if (++down > cap) {
          rep.fail("lowering chain from vertex " + std::to_string(v) + " label " + std::to_string(i) +
                   " does not terminate");
          break;
        }
      }
      if (up != g.eps(v, i))
        rep.fail("vertex " + std::to_string(v) + ", label " + std::to_string(i) + ": eps = " +
                 std::to_string(g.eps(v, i)) + " but the raising chain has length " + std::to_string(up));
      if (down != g.phi(v, i))
        rep.fail("vertex " + std::to_string(v) + ", label " + std::to_string(i) + ": phi = " +
                 std::to_string(g.phi(v, i)) + " but the lowering chain has length " + std::to_string(down));
    }
  }
  return rep;
}

/// Weak connectivity (edges taken as undirected).
[[nodiscard]] inline bool is_connected(const CrystalGraph& g) {
  if (g.size() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int i = 0; i < g.rank(); ++i) {
      for (int w : {g.f_target(u, i), g.e_target(u, i)}) {
        if (w != -1 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++cnt;
          stack.push_back(w);
        }
      }
    }
  }
  return cnt == g.size();
}

struct PerfectReport {
  bool connected = false;       // (1) tensor square weakly connected
  bool weights_in_cone = false; // (2) classical weights below level * (first fundamental weight)
  bool level_bound = false;     // (3) sum of eps-statistics >= level everywhere
  bool level_bijection = false; // (4) unique eps- and phi-realization of every level composition
  std::vector<std::string> messages;

  [[nodiscard]] bool ok() const { return connected && weights_in_cone && level_bound && level_bijection; }
};

/**
 * @brief Test the four perfectness conditions of a complete finite graph at
 *        the given level:
 *  (1) the tensor square is weakly connected;
 *  (2) every classical weight lies in level * (first classical fundamental
 *      weight) minus a nonnegative integer combination of classical simple
 *      roots;
 *  (3) sum_i eps_i >= level at every vertex;
 *  (4) for every composition of the level into n parts there is exactly one
 *      vertex whose eps-vector realizes it and exactly one whose phi-vector
 *      does.
 */
[[nodiscard]] inline PerfectReport check_perfect(const CrystalGraph& g, long long level) {
  PerfectReport rep;
  if (g.has_boundary()) {
    rep.messages.push_back("graph has boundary vertices; perfectness test needs a complete graph");
    return rep;
  }
  const CrystalParams& p = g.params;

  CrystalGraph sq = tensor(g, g);
  rep.connected = is_connected(sq);
  if (!rep.connected) rep.messages.push_back("tensor square is not connected");

  Weight base = zero_weight(p.n);
  if (p.n >= 2) base.lambda[1] = level;
  rep.weights_in_cone = true;
  for (int v = 0; v < g.size(); ++v) {
    auto coords = classical_alpha_coords(p, g.weight(v), base);
    if (!all_nonpositive_integers(coords)) {
      rep.weights_in_cone = false;
      rep.messages.push_back("vertex " + std::to_string(v) +
                             ": classical weight falls outside the cone below the base weight");
      break;
    }
  }

  rep.level_bound = true;
  for (int v = 0; v < g.size(); ++v) {
    long long s = 0;
    for (int i = 0; i < p.n; ++i) s = detail::chk_add(s, g.eps(v, i));
    if (s < level) {
      rep.level_bound = false;
      rep.messages.push_back("vertex " + std::to_string(v) + ": sum of eps = " + std::to_string(s) +
                             " is below the level " + std::to_string(level));
      break;
    }
  }

  rep.level_bijection = true;
  for (const Weight& lam : dominant_weights_of_level(p.n, level)) {
    int eps_hits = 0, phi_hits = 0;
    for (int v = 0; v < g.size(); ++v) {
      if (g.verts[static_cast<std::size_t>(v)].eps == lam.lambda) ++eps_hits;
      if (g.verts[static_cast<std::size_t>(v)].phi == lam.lambda) ++phi_hits;
    }
    if (eps_hits != 1 || phi_hits != 1) {
      rep.level_bijection = false;
      rep.messages.push_back("composition " + display(lam) + ": " + std::to_string(eps_hits) +
                             " eps-realizations and " + std::to_string(phi_hits) +
                             " phi-realizations (need exactly one of each)");
      break;
    }
  }
  return rep;
}

/**
 * @brief Check that a (partial) vertex map src -> dst is a morphism:
 *  (1) mapped vertices keep eps, phi and the weight modulo the null root;
 *  (2) every src edge with both endpoints mapped is matched in dst;
 *  (3) in strict mode, edge absence is also preserved in both directions
 *      (skipped at boundary vertices, where absence may be a generation cut).
 * map[v] is the dst id of src vertex v, or -1 for unmapped.
 */
[[nodiscard]] inline CheckReport check_morphism(const CrystalGraph& src, const CrystalGraph& dst,
                                                const std::vector<int>& map, bool strict) {
  CheckReport rep;
  if (src.params != dst.params) {
    rep.fail("graphs have different parameters");
    return rep;
  }
  if (map.size() != static_cast<std::size_t>(src.size())) {
    rep.fail("map length does not equal the source size");
    return rep;
  }
  int n = src.rank();
  for (int v = 0; v < src.size(); ++v) {
    int w = map[static_cast<std::size_t>(v)];
    if (w == -1) continue;
    if (w < 0 || w >= dst.size()) {
      rep.fail("vertex " + std::to_string(v) + " maps out of range");
      continue;
    }
    if (src.verts[static_cast<std::size_t>(v)].eps != dst.verts[static_cast<std::size_t>(w)].eps)
      rep.fail("vertex " + std::to_string(v) + ": eps changes under the map");
    if (src.verts[static_cast<std::size_t>(v)].phi != dst.verts[static_cast<std::size_t>(w)].phi)
      rep.fail("vertex " + std::to_string(v) + ": phi changes under the map");
    if (!classical_equal(src.weight(v), dst.weight(w)))
      rep.fail("vertex " + std::to_string(v) + ": weight changes under the map");
  }
  for (int v = 0; v < src.size(); ++v) {
    int w = map[static_cast<std::size_t>(v)];
    if (w == -1 || w >= dst.size()) continue;
    for (int i = 0; i < n; ++i) {
      int t = src.f_target(v, i);
      int mt = t == -1 ? -1 : map[static_cast<std::size_t>(t)];
      int dt = dst.f_target(w, i);
      if (t != -1 && mt != -1) {
        if (dt != mt)
          rep.fail("edge " + std::to_string(v) + " -" + std::to_string(i) + "-> " + std::to_string(t) +
                   " is not matched in the target");
      }
      if (strict && !src.is_boundary(v) && !dst.is_boundary(w)) {
        if (t == -1 && dt != -1)
          rep.fail("vertex " + std::to_string(v) + ", label " + std::to_string(i) +
                   ": lowering absent in source but present at the image");
        int s = src.e_target(v, i);
        int ds = dst.e_target(w, i);
        if (s == -1 && ds != -1)
          rep.fail("vertex " + std::to_string(v) + ", label " + std::to_string(i) +
                   ": raising absent in source but present at the image");
      }
    }
  }
  return rep;
}

/**
 * @brief Formal sum of the monomial elements of a graph (all vertices must
 *        serialize monomials), as a canonically ordered multiplicity map.
 */
[[nodiscard]] inline std::map<Monomial, long long> character(const CrystalGraph& g) {
  std::map<Monomial, long long> ch;
  for (int v = 0; v < g.size(); ++v) {
    const auto& el = g.verts[static_cast<std::size_t>(v)].element;
    if (!el.is_object() || !el.contains("factors"))
      throw CrystalError("character needs a graph of monomial elements");
    ch[mono_from_json(el)] += 1;
  }
  return ch;
}

[[nodiscard]] inline std::string character_display(const std::map<Monomial, long long>& ch) {
  std::string s;
  for (const auto& [m, c] : ch) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += display(m);
  }
  return s.empty() ? "0" : s;
}

}  // namespace affcrys
