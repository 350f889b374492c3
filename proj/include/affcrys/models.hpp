#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "affcrys/coherent.hpp"
#include "affcrys/dagger.hpp"
#include "affcrys/errors.hpp"
#include "affcrys/graph.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/quotient.hpp"
#include "affcrys/string_ops.hpp"
#include "affcrys/tuples.hpp"
#include "affcrys/weight.hpp"

namespace affcrys {

/// Monomials under the plain raising/lowering operators with string statistics.
struct StdMonomialModel {
  CrystalParams p;
  using Element = Monomial;
  [[nodiscard]] bool tracks_delta() const { return false; }
  [[nodiscard]] const char* family() const { return "monomial-std"; }
  [[nodiscard]] std::optional<Monomial> e(const Monomial& m, int i) const { return e_std(p, m, i); }
  [[nodiscard]] std::optional<Monomial> f(const Monomial& m, int i) const { return f_std(p, m, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const Monomial& m) const {
    std::vector<long long> eps(static_cast<std::size_t>(p.n)), phi(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
      StringData sd = string_data(p, m, i);
      eps[static_cast<std::size_t>(i)] = sd.eps;
      phi[static_cast<std::size_t>(i)] = sd.phi;
    }
    return {eps, phi};
  }
  [[nodiscard]] Weight weight(const Monomial& m) const { return mono_weight(p, m); }
  [[nodiscard]] nlohmann::json element_json(const Monomial& m) const { return mono_to_json(m); }
  [[nodiscard]] std::string encode(const Monomial& m) const { return mono_to_json(m).dump(); }
};

/// Monomials of the nonnegative fragment under the total lowering operators.
struct DaggerModel {
  CrystalParams p;
  using Element = Monomial;
  [[nodiscard]] bool tracks_delta() const { return false; }
  [[nodiscard]] const char* family() const { return "monomial-dagger"; }
  [[nodiscard]] std::optional<Monomial> e(const Monomial&, int) const { return std::nullopt; }
  [[nodiscard]] std::optional<Monomial> f(const Monomial& m, int i) const { return f_dagger(p, m, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const Monomial& m) const {
    std::vector<long long> eps(static_cast<std::size_t>(p.n)), phi(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
      DaggerData dd = dagger_stats(p, m, i);
      eps[static_cast<std::size_t>(i)] = dd.eps;
      phi[static_cast<std::size_t>(i)] = dd.phi;
    }
    return {eps, phi};
  }
  [[nodiscard]] Weight weight(const Monomial& m) const { return mono_weight(p, m); }
  [[nodiscard]] nlohmann::json element_json(const Monomial& m) const { return mono_to_json(m); }
  [[nodiscard]] std::string encode(const Monomial& m) const { return mono_to_json(m).dump(); }
};

/// The zero-sum X-lattice under the total operators, with limit statistics.
struct CoherentMonomialModel {
  CrystalParams p;
  using Element = Monomial;
  [[nodiscard]] bool tracks_delta() const { return false; }
  [[nodiscard]] const char* family() const { return "monomial-coherent"; }
  [[nodiscard]] std::optional<Monomial> e(const Monomial& m, int i) const { return e_coh(p, m, i); }
  [[nodiscard]] std::optional<Monomial> f(const Monomial& m, int i) const { return f_coh(p, m, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const Monomial& m) const {
    return coh_stats(p, m);
  }
  [[nodiscard]] Weight weight(const Monomial& m) const { return mono_weight(p, m); }
  [[nodiscard]] nlohmann::json element_json(const Monomial& m) const { return mono_to_json(m); }
  [[nodiscard]] std::string encode(const Monomial& m) const { return mono_to_json(m).dump(); }
};

/// Square-free X-products under the quotient operators, with string statistics.
struct BarModel {
  CrystalParams p;
  using Element = Monomial;
  [[nodiscard]] bool tracks_delta() const { return false; }
  [[nodiscard]] const char* family() const { return "monomial-bar"; }
  [[nodiscard]] std::optional<Monomial> e(const Monomial& m, int i) const { return e_bar(p, m, i); }
  [[nodiscard]] std::optional<Monomial> f(const Monomial& m, int i) const { return f_bar(p, m, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const Monomial& m) const {
    std::vector<long long> eps(static_cast<std::size_t>(p.n)), phi(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
      StringData sd = string_data(p, m, i);
      eps[static_cast<std::size_t>(i)] = sd.eps;
      phi[static_cast<std::size_t>(i)] = sd.phi;
    }
    return {eps, phi};
  }
  [[nodiscard]] Weight weight(const Monomial& m) const { return mono_weight(p, m); }
  [[nodiscard]] nlohmann::json element_json(const Monomial& m) const { return mono_to_json(m); }
  [[nodiscard]] std::string encode(const Monomial& m) const { return mono_to_json(m).dump(); }
};

namespace detail {

[[nodiscard]] inline std::pair<std::vector<long long>, std::vector<long long>> tuple_stats(
    const CrystalParams& p, const TupleElement& t) {
  std::vector<long long> eps(static_cast<std::size_t>(p.n)), phi(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    eps[static_cast<std::size_t>(i)] = tuple_eps(p, t, i);
    phi[static_cast<std::size_t>(i)] = tuple_phi(p, t, i);
  }
  return {eps, phi};
}

}  // namespace detail

/// One-row exponent tuples; affine degrees are honored when present.
struct KrModel {
  CrystalParams p;
  long long s = 1;
  bool affine = false;
  using Element = TupleElement;
  [[nodiscard]] bool tracks_delta() const { return affine; }
  [[nodiscard]] const char* family() const { return "tuple-onerow"; }
  [[nodiscard]] std::optional<TupleElement> e(const TupleElement& t, int i) const { return kr_e(p, t, i); }
  [[nodiscard]] std::optional<TupleElement> f(const TupleElement& t, int i) const { return kr_f(p, t, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const TupleElement& t) const {
    return detail::tuple_stats(p, t);
  }
  [[nodiscard]] Weight weight(const TupleElement& t) const { return tuple_weight(p, t); }
  [[nodiscard]] nlohmann::json element_json(const TupleElement& t) const { return tuple_to_json(t); }
  [[nodiscard]] std::string encode(const TupleElement& t) const { return tuple_to_json(t).dump(); }
};

/// Zero-sum integer tuples under the total coherent operators.
struct CoherentTupleModel {
  CrystalParams p;
  using Element = TupleElement;
  [[nodiscard]] bool tracks_delta() const { return false; }
  [[nodiscard]] const char* family() const { return "tuple-coherent"; }
  [[nodiscard]] std::optional<TupleElement> e(const TupleElement& t, int i) const { return coh_tuple_e(p, t, i); }
  [[nodiscard]] std::optional<TupleElement> f(const TupleElement& t, int i) const { return coh_tuple_f(p, t, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const TupleElement& t) const {
    return detail::tuple_stats(p, t);
  }
  [[nodiscard]] Weight weight(const TupleElement& t) const { return tuple_weight(p, t); }
  [[nodiscard]] nlohmann::json element_json(const TupleElement& t) const { return tuple_to_json(t); }
  [[nodiscard]] std::string encode(const TupleElement& t) const { return tuple_to_json(t).dump(); }
};

/// One-column 0/1 tuples under the guarded swap operators.
struct ColumnModel {
  CrystalParams p;
  long long r = 1;
  using Element = TupleElement;
  [[nodiscard]] bool tracks_delta() const { return false; }
  [[nodiscard]] const char* family() const { return "tuple-onecolumn"; }
  [[nodiscard]] std::optional<TupleElement> e(const TupleElement& t, int i) const { return col_e(p, t, i); }
  [[nodiscard]] std::optional<TupleElement> f(const TupleElement& t, int i) const { return col_f(p, t, i); }
  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const TupleElement& t) const {
    return detail::tuple_stats(p, t);
  }
  [[nodiscard]] Weight weight(const TupleElement& t) const { return tuple_weight(p, t); }
  [[nodiscard]] nlohmann::json element_json(const TupleElement& t) const { return tuple_to_json(t); }
  [[nodiscard]] std::string encode(const TupleElement& t) const { return tuple_to_json(t).dump(); }
};

/**
 * @brief Tensor product of two models, left factor first (the left factor's
 *        eps decides against the right factor's phi, exactly as in the graph
 *        tensor).
 */
template <class L, class R>
struct TensorModel {
  L left;
  R right;
  CrystalParams p;  // = left.p = right.p
  using Element = std::pair<typename L::Element, typename R::Element>;

  TensorModel(L l, R r) : left(std::move(l)), right(std::move(r)), p(left.p) {
    if (left.p != right.p) throw ParamsMismatch("tensor model: factor parameters differ");
  }

  [[nodiscard]] bool tracks_delta() const { return left.tracks_delta() || right.tracks_delta(); }
  [[nodiscard]] const char* family() const { return "tensor"; }

  [[nodiscard]] std::optional<Element> f(const Element& x, int i) const {
    long long el = left.stats(x.first).first[static_cast<std::size_t>(i)];
    long long pr = right.stats(x.second).second[static_cast<std::size_t>(i)];
    if (el >= pr) {
      auto img = left.f(x.first, i);
      if (!img) return std::nullopt;
      return Element{*img, x.second};
    }
    auto img = right.f(x.second, i);
    if (!img) return std::nullopt;
    return Element{x.first, *img};
  }

  [[nodiscard]] std::optional<Element> e(const Element& x, int i) const {
    long long el = left.stats(x.first).first[static_cast<std::size_t>(i)];
    long long pr = right.stats(x.second).second[static_cast<std::size_t>(i)];
    if (el > pr) {
      auto img = left.e(x.first, i);
      if (!img) return std::nullopt;
      return Element{*img, x.second};
    }
    auto img = right.e(x.second, i);
    if (!img) return std::nullopt;
    return Element{x.first, *img};
  }

  [[nodiscard]] std::pair<std::vector<long long>, std::vector<long long>> stats(const Element& x) const {
    auto [el, pl] = left.stats(x.first);
    auto [er, pr] = right.stats(x.second);
    Weight wl = left.weight(x.first), wr = right.weight(x.second);
    std::vector<long long> eps(static_cast<std::size_t>(p.n)), phi(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
      std::size_t ui = static_cast<std::size_t>(i);
      eps[ui] = std::max(er[ui], detail::chk_add(el[ui], detail::chk_mul(-1, pairing(i, wr))));
      phi[ui] = std::max(pl[ui], detail::chk_add(pr[ui], pairing(i, wl)));
    }
    return {eps, phi};
  }

  [[nodiscard]] Weight weight(const Element& x) const { return add(left.weight(x.first), right.weight(x.second)); }
  [[nodiscard]] nlohmann::json element_json(const Element& x) const {
    return nlohmann::json::array({left.element_json(x.first), right.element_json(x.second)});
  }
  [[nodiscard]] std::string encode(const Element& x) const { return element_json(x).dump(); }
};

/**
 * @brief Raising partner of the total lowering structure, recovered from a
 *        generated fragment by in-edge lookup: e_i(m) is the unique fragment
 *        element whose i-lowering is m, or absent.  The element must belong
 *        to the fragment graph.
 */
[[nodiscard]] inline std::optional<Monomial> e_dagger(const CrystalGraph& fragment, const CrystalParams& p,
                                                      const Monomial& m, int i) {
  if (i < 0 || i >= p.n) throw CrystalError("e_dagger: Dynkin label out of range");
  int v = fragment.find(mono_to_json(m).dump());
  if (v == -1) throw CrystalError("e_dagger: element does not belong to the given fragment: " + display(m));
  int u = fragment.e_target(v, i);
  if (u == -1) return std::nullopt;
  return mono_from_json(fragment.verts[static_cast<std::size_t>(u)].element);
}

}  // namespace affcrys
