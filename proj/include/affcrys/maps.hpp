#pragma once

#include "affcrys/errors.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/tuples.hpp"
#include "affcrys/variables.hpp"
#include "affcrys/xfactor.hpp"

namespace affcrys {

/// One-row tuple (x_1, ..., x_n) -> prod_j X_{j,0}^{x_j}.
[[nodiscard]] inline Monomial phi_map(const CrystalParams& p, const TupleElement& t) {
  if (t.variant != TupleVariant::KR) throw CrystalError("phi_map applies to one-row tuples");
  validate(p, t);
  return x_power_product(p, t.xs);
}

/// Coherent tuple (x_1, ..., x_n) -> prod_j X_{j,0}^{x_j} (lands in the zero-sum lattice).
[[nodiscard]] inline Monomial psi_map(const CrystalParams& p, const TupleElement& t) {
  if (t.variant != TupleVariant::Coherent) throw CrystalError("psi_map applies to coherent tuples");
  validate(p, t);
  return x_power_product(p, t.xs);
}

/// One-column tuple (x_1, ..., x_n) -> prod_j X_{j,0}^{x_j} (a square-free product).
[[nodiscard]] inline Monomial col_seed_map(const CrystalParams& p, const TupleElement& t) {
  if (t.variant != TupleVariant::Column) throw CrystalError("col_seed_map applies to one-column tuples");
  validate(p, t);
  return x_power_product(p, t.xs);
}

/**
 * @brief Inclusion of the one-column tuple model into the one-row model with
 *        s = r: the underlying tuple is unchanged, only the operator family
 *        changes.  Statistics and weights agree; every one-column edge is a
 *        one-row edge.
 */
[[nodiscard]] inline TupleElement col_embed(const CrystalParams& p, const TupleElement& t) {
  if (t.variant != TupleVariant::Column) throw CrystalError("col_embed applies to one-column tuples");
  validate(p, t);
  TupleElement r = t;
  r.variant = TupleVariant::KR;
  validate(p, r);
  return r;
}

}  // namespace affcrys
