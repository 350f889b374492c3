#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/tuples.hpp"
#include "affcrys/weight.hpp"

namespace affcrys {

/**
 * @brief Generation limits for closure computations.
 *
 * max_depth cuts the breadth-first expansion at a fixed distance from the
 * seeds; max_size stops admitting new vertices past a count.  Vertices whose
 * expansion was suppressed by either cut are flagged as boundary.  The hard
 * cap guards unlimited requests and raises LimitExceeded when crossed.
 */
struct Limits {
  std::optional<long long> max_depth;
  std::optional<long long> max_size;
  long long hard_cap = 1000000;
};

struct GraphVertex {
  nlohmann::json element;
  std::vector<long long> eps;
  std::vector<long long> phi;
  Weight wt;
};

/**
 * @brief A finite labeled crystal graph with cached statistics.
 *
 * Vertices carry their element serialization, eps/phi vectors and weight;
 * per label i there is at most one outgoing and one incoming f-edge per
 * vertex (fout/fin store the partner id or -1).  Vertex numbering is
 * canonical: weakly connected components are ordered by their minimal
 * element encoding, and within a component vertices appear in breadth-first
 * order from that minimal element (neighbours visited f_0..f_{n-1} then
 * e_0..e_{n-1}), so equal mathematical content yields byte-identical
 * serializations.
 */
class CrystalGraph {
 public:
  CrystalParams params;
  bool tracks_delta = false;
  nlohmann::json meta = nlohmann::json::object();
  std::vector<GraphVertex> verts;
  std::vector<std::vector<int>> fout;  // [label][vertex] -> target id or -1
  std::vector<std::vector<int>> fin;   // [label][vertex] -> source id or -1
  std::vector<char> boundary;

  [[nodiscard]] int size() const { return static_cast<int>(verts.size()); }
  [[nodiscard]] int rank() const { return params.n; }
  [[nodiscard]] bool is_boundary(int v) const { return boundary[static_cast<std::size_t>(v)] != 0; }
  [[nodiscard]] bool has_boundary() const {
    for (char b : boundary)
      if (b) return true;
    return false;
  }
  [[nodiscard]] int f_target(int v, int i) const { return fout[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]; }
  [[nodiscard]] int e_target(int v, int i) const { return fin[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]; }
  [[nodiscard]] long long eps(int v, int i) const { return verts[static_cast<std::size_t>(v)].eps[static_cast<std::size_t>(i)]; }
  [[nodiscard]] long long phi(int v, int i) const { return verts[static_cast<std::size_t>(v)].phi[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const Weight& weight(int v) const { return verts[static_cast<std::size_t>(v)].wt; }

  /// Vertex id of the element with the given canonical encoding, or -1.
  [[nodiscard]] int find(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
  }

  [[nodiscard]] long long edge_count() const {
    long long c = 0;
    for (const auto& col : fout)
      for (int t : col)
        if (t != -1) ++c;
    return c;
  }

  [[nodiscard]] long long edge_count(int i) const {
    long long c = 0;
    for (int t : fout[static_cast<std::size_t>(i)])
      if (t != -1) ++c;
    return c;
  }

  /// All f-edges as (src, label, dst), sorted by (src, label).
  [[nodiscard]] std::vector<std::array<int, 3>> edges() const {
    std::vector<std::array<int, 3>> es;
    for (int v = 0; v < size(); ++v)
      for (int i = 0; i < rank(); ++i)
        if (f_target(v, i) != -1) es.push_back({v, i, f_target(v, i)});
    return es;
  }

  void rebuild_index() {
    index_.clear();
    for (int v = 0; v < size(); ++v) {
      std::string key = verts[static_cast<std::size_t>(v)].element.dump();
      if (!index_.emplace(key, v).second) throw CrystalError("duplicate element in crystal graph");
    }
  }

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] static CrystalGraph from_json(const nlohmann::json& j);
  [[nodiscard]] std::string to_dot() const;

 private:
  std::unordered_map<std::string, int> index_;
};

/// Human-readable form of a vertex element from its serialization.
[[nodiscard]] inline std::string display_element(const nlohmann::json& e) {
  if (e.is_array() && e.size() == 2)
    return display_element(e.at(0)) + " (x) " + display_element(e.at(1));
  if (e.is_object() && e.contains("factors")) return display(mono_from_json(e));
  if (e.is_object() && e.contains("xs")) return display(tuple_from_json(e));
  return e.dump();
}

namespace detail {

/// Renumber raw closure output into canonical order (see CrystalGraph).
inline CrystalGraph canonicalize(const CrystalParams& p, bool tracks_delta, nlohmann::json meta,
                                 std::vector<GraphVertex>&& verts, const std::vector<std::string>& keys,
                                 const std::vector<std::vector<int>>& out, const std::vector<std::vector<int>>& in,
                                 const std::vector<char>& bnd) {
  int n = p.n;
  int V = static_cast<int>(verts.size());
  std::vector<int> comp(static_cast<std::size_t>(V), -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < V; ++v) {
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
      for (int i = 0; i < n; ++i) {
        for (int w : {out[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)],
                      in[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]}) {
          if (w != -1 && comp[static_cast<std::size_t>(w)] == -1) {
            comp[static_cast<std::size_t>(w)] = c;
            q.push(w);
          }
        }
      }
    }
  }
  // Order components by their lexicographically least element encoding.
  std::vector<int> roots(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    int best = members[c][0];
    for (int v : members[c])
      if (keys[static_cast<std::size_t>(v)] < keys[static_cast<std::size_t>(best)]) best = v;
    roots[c] = best;
  }
  std::vector<std::size_t> comp_order(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) comp_order[c] = c;
  std::sort(comp_order.begin(), comp_order.end(), [&](std::size_t a, std::size_t b) {
    return keys[static_cast<std::size_t>(roots[a])] < keys[static_cast<std::size_t>(roots[b])];
  });
  // Within each component, breadth-first from the least element.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(V));
  std::vector<int> newid(static_cast<std::size_t>(V), -1);
  for (std::size_t oc : comp_order) {
    std::queue<int> q;
    q.push(roots[oc]);
    newid[static_cast<std::size_t>(roots[oc])] = static_cast<int>(order.size());
    order.push_back(roots[oc]);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      auto visit = [&](int w) {
        if (w != -1 && newid[static_cast<std::size_t>(w)] == -1) {
          newid[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
          order.push_back(w);
          q.push(w);
        }
      };
      for (int i = 0; i < n; ++i) visit(out[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]);
      for (int i = 0; i < n; ++i) visit(in[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]);
    }
  }
  CrystalGraph g;
  g.params = p;
  g.tracks_delta = tracks_delta;
  g.meta = std::move(meta);
  g.verts.resize(static_cast<std::size_t>(V));
  g.fout.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(V), -1));
  g.fin.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(V), -1));
  g.boundary.assign(static_cast<std::size_t>(V), 0);
  for (int v = 0; v < V; ++v) {
    int nv = newid[static_cast<std::size_t>(v)];
    g.verts[static_cast<std::size_t>(nv)] = std::move(verts[static_cast<std::size_t>(v)]);
    g.boundary[static_cast<std::size_t>(nv)] = bnd[static_cast<std::size_t>(v)];
    for (int i = 0; i < n; ++i) {
      int t = out[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
      if (t != -1) {
        g.fout[static_cast<std::size_t>(i)][static_cast<std::size_t>(nv)] = newid[static_cast<std::size_t>(t)];
        g.fin[static_cast<std::size_t>(i)][static_cast<std::size_t>(newid[static_cast<std::size_t>(t)])] = nv;
      }
    }
  }
  g.rebuild_index();
  return g;
}

}  // namespace detail

/**
 * @brief Breadth-first closure of seed elements under a model's operators.
 *
 * The Model supplies: nested type Element; fields/methods p (CrystalParams),
 * tracks_delta(), family(), e(el, i) and f(el, i) returning
 * std::optional<Element>, stats(el) returning the (eps, phi) vector pair,
 * weight(el), element_json(el) and encode(el).  Directions can be disabled
 * (e.g. lowering-only closures).  Inconsistent operator images (two distinct
 * f_i-images claimed for one vertex) raise CrystalError.
 */
template <class Model>
[[nodiscard]] CrystalGraph closure(const Model& model, const std::vector<typename Model::Element>& seeds,
                                   const Limits& limits = {}, bool use_e = true, bool use_f = true) {
  const int n = model.p.n;
  std::vector<typename Model::Element> elems;
  std::vector<long long> depth;
  std::vector<char> bnd;
  std::vector<std::string> keys;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));

  auto add_vertex = [&](const typename Model::Element& el, long long d) -> int {
    std::string key = model.encode(el);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (static_cast<long long>(elems.size()) >= limits.hard_cap)
      throw LimitExceeded("closure crossed the hard vertex cap of " + std::to_string(limits.hard_cap));
    int id = static_cast<int>(elems.size());
    index.emplace(std::move(key), id);
    elems.push_back(el);
    keys.push_back(model.encode(el));
    depth.push_back(d);
    bnd.push_back(0);
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)].push_back(-1);
      in[static_cast<std::size_t>(i)].push_back(-1);
    }
    return id;
  };

  for (const auto& s : seeds) add_vertex(s, 0);

  for (int u = 0; u < static_cast<int>(elems.size()); ++u) {
    if (limits.max_depth && depth[static_cast<std::size_t>(u)] >= *limits.max_depth) {
      bnd[static_cast<std::size_t>(u)] = 1;
      continue;
    }
    auto expand = [&](bool lowering) {
      for (int i = 0; i < n; ++i) {
        std::optional<typename Model::Element> img =
            lowering ? model.f(elems[static_cast<std::size_t>(u)], i) : model.e(elems[static_cast<std::size_t>(u)], i);
        if (!img) continue;
        std::string key = model.encode(*img);
        auto it = index.find(key);
        int t;
        if (it == index.end()) {
          if (limits.max_size && static_cast<long long>(elems.size()) >= *limits.max_size) {
            bnd[static_cast<std::size_t>(u)] = 1;
            continue;
          }
          t = add_vertex(*img, depth[static_cast<std::size_t>(u)] + 1);
        } else {
          t = it->second;
        }
        int src = lowering ? u : t;
        int dst = lowering ? t : u;
        int& oslot = out[static_cast<std::size_t>(i)][static_cast<std::size_t>(src)];
        int& islot = in[static_cast<std::size_t>(i)][static_cast<std::size_t>(dst)];
        if (oslot != -1 && oslot != dst)
          throw CrystalError("conflicting lowering images for one vertex and label " + std::to_string(i));
        if (islot != -1 && islot != src)
          throw CrystalError("conflicting raising images for one vertex and label " + std::to_string(i));
        oslot = dst;
        islot = src;
      }
    };
    if (use_f) expand(true);
    if (use_e) expand(false);
  }

  std::vector<GraphVertex> verts(elems.size());
  for (std::size_t v = 0; v < elems.size(); ++v) {
    verts[v].element = model.element_json(elems[v]);
    auto [ev, pv] = model.stats(elems[v]);
    verts[v].eps = std::move(ev);
    verts[v].phi = std::move(pv);
    verts[v].wt = model.weight(elems[v]);
  }
  nlohmann::json meta{{"family", model.family()}, {"tracks_delta", model.tracks_delta()}};
  return detail::canonicalize(model.p, model.tracks_delta(), std::move(meta), std::move(verts), keys, out, in,
                              bnd);
}

/**
 * @brief Tensor product of two cached graphs, left factor written first.
 *
 * With x in the left graph and y in the right (the left factor is the one
 * whose statistics decide against the right factor's phi):
 *   eps_i(x (x) y) = max(eps_i(y), eps_i(x) - <h_i, wt(y)>),
 *   phi_i(x (x) y) = max(phi_i(x), phi_i(y) + <h_i, wt(x)>),
 *   f_i acts on x iff eps_i(x) >= phi_i(y), e_i acts on x iff eps_i(x) > phi_i(y).
 * A pair is boundary when either factor is; its edges are then only as
 * complete as the factors' cached edges allow.
 */
[[nodiscard]] inline CrystalGraph tensor(const CrystalGraph& L, const CrystalGraph& R) {
  if (L.params != R.params) throw ParamsMismatch("tensor: factor graphs have different parameters");
  const CrystalParams& p = L.params;
  int n = p.n;
  int VL = L.size(), VR = R.size();
  int V = VL * VR;
  std::vector<GraphVertex> verts(static_cast<std::size_t>(V));
  std::vector<std::string> keys(static_cast<std::size_t>(V));
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(V), -1));
  std::vector<std::vector<int>> in(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(V), -1));
  std::vector<char> bnd(static_cast<std::size_t>(V), 0);
  auto id_of = [VR](int u, int v) { return u * VR + v; };
  for (int u = 0; u < VL; ++u) {
    for (int v = 0; v < VR; ++v) {
      int id = id_of(u, v);
      GraphVertex& gv = verts[static_cast<std::size_t>(id)];
      gv.element = nlohmann::json::array({L.verts[static_cast<std::size_t>(u)].element,
                                          R.verts[static_cast<std::size_t>(v)].element});
      keys[static_cast<std::size_t>(id)] = gv.element.dump();
      gv.eps.resize(static_cast<std::size_t>(n));
      gv.phi.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        long long el = L.eps(u, i), pl = L.phi(u, i);
        long long er = R.eps(v, i), pr = R.phi(v, i);
        long long wl = pairing(i, L.weight(u)), wr = pairing(i, R.weight(v));
        gv.eps[static_cast<std::size_t>(i)] = std::max(er, detail::chk_add(el, detail::chk_mul(-1, wr)));
        gv.phi[static_cast<std::size_t>(i)] = std::max(pl, detail::chk_add(pr, wl));
      }
      gv.wt = add(L.weight(u), R.weight(v));
      bnd[static_cast<std::size_t>(id)] = static_cast<char>(L.is_boundary(u) || R.is_boundary(v));
      for (int i = 0; i < n; ++i) {
        int tgt;
        if (L.eps(u, i) >= R.phi(v, i)) {
          int lu = L.f_target(u, i);
          tgt = lu == -1 ? -1 : id_of(lu, v);
        } else {
          int rv = R.f_target(v, i);
          tgt = rv == -1 ? -1 : id_of(u, rv);
        }
        if (tgt != -1) {
          out[static_cast<std::size_t>(i)][static_cast<std::size_t>(id)] = tgt;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int id = 0; id < V; ++id) {
      int t = out[static_cast<std::size_t>(i)][static_cast<std::size_t>(id)];
      if (t != -1) {
        int& islot = in[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        if (islot != -1) throw CrystalError("tensor: two lowering edges converged on one vertex");
        islot = id;
      }
    }
  nlohmann::json meta{{"family", "tensor"}, {"tracks_delta", L.tracks_delta || R.tracks_delta}};
  return detail::canonicalize(p, L.tracks_delta || R.tracks_delta, std::move(meta), std::move(verts), keys, out,
                              in, bnd);
}

inline nlohmann::json CrystalGraph::to_json() const {
  nlohmann::json j;
  j["params"] = nlohmann::json{
      {"K", params.K}, {"n", params.n}, {"next_shift", params.next_shift}, {"prev_shift", params.prev_shift}};
  nlohmann::json vs = nlohmann::json::array();
  for (int v = 0; v < size(); ++v) {
    const GraphVertex& gv = verts[static_cast<std::size_t>(v)];
    vs.push_back(nlohmann::json{
        {"element", gv.element}, {"eps", gv.eps}, {"id", v}, {"phi", gv.phi}, {"wt", weight_to_json(gv.wt)}});
  }
  j["vertices"] = std::move(vs);
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : edges()) es.push_back(nlohmann::json{{"dst", e[2]}, {"i", e[1]}, {"src", e[0]}});
  j["edges"] = std::move(es);
  nlohmann::json bs = nlohmann::json::array();
  for (int v = 0; v < size(); ++v)
    if (is_boundary(v)) bs.push_back(v);
  j["boundary"] = std::move(bs);
  j["meta"] = meta;
  return j;
}

inline CrystalGraph CrystalGraph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("params") || !j.contains("vertices") || !j.contains("edges") ||
      !j.contains("boundary"))
    throw CrystalError("graph JSON must carry params, vertices, edges and boundary");
  CrystalGraph g;
  const auto& jp = j.at("params");
  g.params.n = jp.at("n").get<int>();
  g.params.K = jp.at("K").get<long long>();
  g.params.prev_shift = jp.at("prev_shift").get<std::vector<long long>>();
  g.params.next_shift = jp.at("next_shift").get<std::vector<long long>>();
  if (g.params.n < 2 || g.params.prev_shift.size() != static_cast<std::size_t>(g.params.n) ||
      g.params.next_shift.size() != static_cast<std::size_t>(g.params.n))
    throw CrystalError("graph JSON carries malformed parameters");
  g.meta = j.contains("meta") ? j.at("meta") : nlohmann::json::object();
  g.tracks_delta = g.meta.is_object() && g.meta.value("tracks_delta", false);
  int V = static_cast<int>(j.at("vertices").size());
  g.verts.resize(static_cast<std::size_t>(V));
  std::vector<char> seen(static_cast<std::size_t>(V), 0);
  for (const auto& jv : j.at("vertices")) {
    int id = jv.at("id").get<int>();
    if (id < 0 || id >= V || seen[static_cast<std::size_t>(id)])
      throw CrystalError("graph JSON vertex ids must be 0..V-1 without repeats");
    seen[static_cast<std::size_t>(id)] = 1;
    GraphVertex& gv = g.verts[static_cast<std::size_t>(id)];
    gv.element = jv.at("element");
    gv.eps = jv.at("eps").get<std::vector<long long>>();
    gv.phi = jv.at("phi").get<std::vector<long long>>();
    gv.wt = weight_from_json(jv.at("wt"));
    if (gv.eps.size() != static_cast<std::size_t>(g.params.n) || gv.phi.size() != static_cast<std::size_t>(g.params.n))
      throw CrystalError("graph JSON vertex statistics have the wrong rank");
  }
  g.fout.assign(static_cast<std::size_t>(g.params.n), std::vector<int>(static_cast<std::size_t>(V), -1));
  g.fin.assign(static_cast<std::size_t>(g.params.n), std::vector<int>(static_cast<std::size_t>(V), -1));
  for (const auto& je : j.at("edges")) {
    int src = je.at("src").get<int>(), dst = je.at("dst").get<int>(), i = je.at("i").get<int>();
    if (src < 0 || src >= V || dst < 0 || dst >= V || i < 0 || i >= g.params.n)
      throw CrystalError("graph JSON edge out of range");
    if (g.fout[static_cast<std::size_t>(i)][static_cast<std::size_t>(src)] != -1 ||
        g.fin[static_cast<std::size_t>(i)][static_cast<std::size_t>(dst)] != -1)
      throw CrystalError("graph JSON repeats an edge slot");
    g.fout[static_cast<std::size_t>(i)][static_cast<std::size_t>(src)] = dst;
    g.fin[static_cast<std::size_t>(i)][static_cast<std::size_t>(dst)] = src;
  }
  g.boundary.assign(static_cast<std::size_t>(V), 0);
  for (const auto& jb : j.at("boundary")) {
    int v = jb.get<int>();
    if (v < 0 || v >= V) throw CrystalError("graph JSON boundary id out of range");
    g.boundary[static_cast<std::size_t>(v)] = 1;
  }
  g.rebuild_index();
  return g;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

}  // namespace detail

inline std::string CrystalGraph::to_dot() const {
  std::string s = "digraph crystal {\n  rankdir=TB;\n";
  for (int v = 0; v < size(); ++v) {
    s += "  v" + std::to_string(v) + " [label=\"" +
         detail::dot_escape(display_element(verts[static_cast<std::size_t>(v)].element)) + "\"";
    if (is_boundary(v)) s += ", style=dashed";
    s += "];\n";
  }
  for (const auto& e : edges())
    s += "  v" + std::to_string(e[0]) + " -> v" + std::to_string(e[2]) + " [label=\"" + std::to_string(e[1]) +
         "\"];\n";
  s += "}\n";
  return s;
}

}  // namespace affcrys
