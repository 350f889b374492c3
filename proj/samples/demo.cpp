/**
 * @file demo.cpp
 * @brief A short tour: build a one-row crystal two ways, compare them, and run
 *        one verifier end to end.
 */

#include <iostream>

#include "affcrys/affcrys.hpp"

int main() {
  using namespace affcrys;

  CrystalParams p = make_params(3);

  // the rank-3, capacity-3 one-row crystal as exponent tuples
  CrystalGraph tuples = closure(KrModel{p, 3}, {kr_highest(p, 3)});
  std::cout << "tuple model:    " << tuples.size() << " vertices, " << tuples.edge_count()
            << " arrows\n";

  // the same crystal grown from a single Nakajima monomial seed
  CrystalGraph monomials = closure(StdMonomialModel{p}, {seed_m1s(p, 3)});
  std::cout << "monomial model: " << monomials.size() << " vertices, " << monomials.edge_count()
            << " arrows\n";

  auto iso = is_isomorphic(monomials, tuples);
  std::cout << "isomorphic:     " << (iso ? "yes" : "no") << "\n";

  std::cout << "character of the capacity-2 graph:\n  "
            << character_display(character(closure(StdMonomialModel{p}, {seed_m1s(p, 2)}))) << "\n";

  VerifyReport rep = verify_column(make_params(4), 2);
  std::cout << "column verifier: " << rep.to_json()["status"] << "\n";

  return iso && rep.pass ? 0 : 1;
}
