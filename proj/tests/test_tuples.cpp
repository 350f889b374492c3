#include <catch2/catch_amalgamated.hpp>

#include "affcrys/affcrys.hpp"
#include "oracle_models.hpp"

using namespace affcrys;

TEST_CASE("row tuple model agrees with the reference implementation") {
  for (int n = 2; n <= 5; ++n) {
    CrystalParams p = make_params(n);
    for (long long s = 1; s <= 4; ++s) {
      auto all = oracle::enumerate_kr(n, s);
      for (const auto& xs : all) {
        TupleElement t = make_kr(p, s, xs);
        for (int i = 0; i < n; ++i) {
          REQUIRE(tuple_eps(p, t, i) == oracle::eps(xs, i));
          REQUIRE(tuple_phi(p, t, i) == oracle::phi(xs, i));
          auto dn = kr_f(p, t, i);
          auto odn = oracle::kr_f(xs, i);
          REQUIRE(dn.has_value() == odn.has_value());
          if (dn) {
            REQUIRE(dn->xs == *odn);
            auto back = kr_e(p, *dn, i);
            REQUIRE(back.has_value());
            REQUIRE(*back == t);
          }
          auto up = kr_e(p, t, i);
          auto oup = oracle::kr_e(xs, i);
          REQUIRE(up.has_value() == oup.has_value());
          if (up) REQUIRE(up->xs == *oup);
        }
        Weight w = tuple_weight(p, t);
        REQUIRE(w.lambda == oracle::weight(xs));
        REQUIRE(w.delta == 0);
      }
    }
  }
}

TEST_CASE("column tuple model agrees with the reference implementation") {
  for (int n = 2; n <= 5; ++n) {
    CrystalParams p = make_params(n);
    for (int r = 1; r < n; ++r) {
      auto all = oracle::enumerate_col(n, r);
      for (const auto& xs : all) {
        TupleElement t = make_column(p, r, xs);
        for (int i = 0; i < n; ++i) {
          auto dn = col_f(p, t, i);
          auto odn = oracle::col_f(xs, i);
          REQUIRE(dn.has_value() == odn.has_value());
          if (dn) REQUIRE(dn->xs == *odn);
          auto up = col_e(p, t, i);
          auto oup = oracle::col_e(xs, i);
          REQUIRE(up.has_value() == oup.has_value());
          if (up) REQUIRE(up->xs == *oup);
        }
      }
    }
  }
}

TEST_CASE("coherent tuples move freely") {
  CrystalParams p = make_params(4);
  TupleElement t = make_coherent(p, {2, -1, 0, -1});
  for (int i = 0; i < 4; ++i) {
    TupleElement dn = coh_tuple_f(p, t, i);
    REQUIRE(coh_tuple_e(p, dn, i) == t);
    long long sum = 0;
    for (long long x : dn.xs) sum += x;
    REQUIRE(sum == 0);
  }
  REQUIRE_THROWS_AS(make_coherent(p, {1, 0, 0, 0}), CrystalError);
}

TEST_CASE("validation guards each variant") {
  CrystalParams p = make_params(3);
  REQUIRE_THROWS_AS(make_kr(p, 3, {1, -1, 3}), CrystalError);  // negative entry
  REQUIRE_THROWS_AS(make_kr(p, 3, {1, 1, 0}), CrystalError);   // wrong sum
  REQUIRE_THROWS_AS(make_column(p, 2, {2, 0, 0}), CrystalError);
  REQUIRE_THROWS_AS(make_column(p, 3, {1, 1, 1}), CrystalError);  // r = n not allowed
  REQUIRE_NOTHROW(make_column(p, 2, {1, 0, 1}));
  REQUIRE(kr_highest(p, 2).xs == std::vector<long long>{2, 0, 0});
}

TEST_CASE("affinization tracks degrees through the zero arrows") {
  CrystalParams p = make_params(3);
  TupleElement b = affinize(p, make_kr(p, 3, {2, 0, 1}), 3);
  REQUIRE(b.degree == 3);
  REQUIRE(display(b) == "(2,0,1)@3");

  auto up = kr_e(p, b, 0);
  REQUIRE(up.has_value());
  REQUIRE(up->xs == std::vector<long long>{1, 0, 2});
  REQUIRE(up->degree == 4);
  auto back = kr_f(p, *up, 0);
  REQUIRE(back.has_value());
  REQUIRE(*back == b);

  auto dn1 = kr_f(p, b, 1);
  REQUIRE(dn1.has_value());
  REQUIRE(dn1->degree == 3);  // classical arrows leave the degree alone

  Weight w = tuple_weight(p, *up);
  REQUIRE(w.lambda == std::vector<long long>{1, 1, -2});
  REQUIRE(w.delta == 4);
  REQUIRE(sub(w, tuple_weight(p, b)) == alpha_weight(p, 0));

  SECTION("weight formula matches classical part plus the null shift") {
    Weight wb = tuple_weight(p, b);
    TupleElement cls = make_kr(p, 3, b.xs);
    REQUIRE(classical_equal(wb, tuple_weight(p, cls)));
    REQUIRE(wb.delta == 3);
  }
}

TEST_CASE("promotion twists the entries cyclically") {
  CrystalParams p = make_params(4);
  TupleElement t = make_kr(p, 4, {1, 2, 0, 1});
  TupleElement pr = promotion(p, t);
  REQUIRE(pr.xs == std::vector<long long>{1, 1, 2, 0});
  REQUIRE(promotion_inv(p, pr) == t);

  SECTION("promotion conjugates the arrow labels") {
    for (int n : {2, 3, 4}) {
      CrystalParams q = make_params(n);
      for (long long s = 1; s <= 3; ++s) {
        for (const auto& xs : oracle::enumerate_kr(n, s)) {
          TupleElement u = make_kr(q, s, xs);
          for (int i = 0; i < n; ++i) {
            // pr . f_i = f_{i+1} . pr
            auto direct = kr_f(q, u, i);
            auto routed = kr_f(q, promotion(q, u), (i + 1) % n);
            REQUIRE(direct.has_value() == routed.has_value());
            if (direct) REQUIRE(promotion(q, *direct) == *routed);
          }
        }
      }
    }
  }
}

TEST_CASE("tuple serialization round-trips") {
  CrystalParams p = make_params(3);
  TupleElement a = make_kr(p, 3, {2, 0, 1});
  TupleElement b = affinize(p, a, -2);
  TupleElement c = make_column(p, 2, {1, 0, 1});
  TupleElement d = make_coherent(p, {1, -1, 0});
  for (const TupleElement& t : {a, b, c, d}) {
    TupleElement rt = tuple_from_json(tuple_to_json(t));
    REQUIRE(rt == t);
    REQUIRE(tuple_to_json(rt).dump() == tuple_to_json(t).dump());
  }
  REQUIRE(tuple_to_json(a)["variant"] == "kr");
  REQUIRE(tuple_to_json(c)["variant"] == "column");
  REQUIRE(tuple_to_json(d)["variant"] == "coherent");
  REQUIRE(!tuple_to_json(a).contains("degree"));
  REQUIRE(tuple_to_json(b)["degree"] == -2);
}

TEST_CASE("monomial realizations of tuples") {
  CrystalParams p3 = make_params(3);

  SECTION("row realization lands on the worked vertex") {
    Monomial m = phi_map(p3, make_kr(p3, 3, {1, 1, 1}));
    Monomial want;
    for (int j : {0, 1, 2}) want = mono_mul(want, mono_y(j, 0));
    for (int j : {0, 1, 2}) want = mono_mul(want, mono_y(j, 1, -1));
    REQUIRE(m == want);
  }

  SECTION("row realization at rank five") {
    CrystalParams p5 = make_params(5);
    Monomial m = phi_map(p5, make_kr(p5, 2, {0, 2, 0, 0, 0}));
    REQUIRE(m == mono_pow(x_monomial(p5, 2, 0), 2));
  }

  SECTION("coherent realization") {
    Monomial m = psi_map(p3, make_coherent(p3, {-1, 1, 0}));
    REQUIRE(m == x_power_product(p3, {-1, 1, 0}));
    REQUIRE(coherent_vector(p3, m) == std::vector<long long>{-1, 1, 0});
  }

  SECTION("variant gating") {
    REQUIRE_THROWS_AS(phi_map(p3, make_coherent(p3, {0, 0, 0})), CrystalError);
    REQUIRE_THROWS_AS(psi_map(p3, make_kr(p3, 1, {1, 0, 0})), CrystalError);
    REQUIRE_THROWS_AS(col_seed_map(p3, make_kr(p3, 1, {1, 0, 0})), CrystalError);
  }

  SECTION("statistics transport along the row realization") {
    for (int n : {2, 3, 4}) {
      CrystalParams p = make_params(n);
      for (long long s = 1; s <= 3; ++s)
        for (const auto& xs : oracle::enumerate_kr(n, s)) {
          TupleElement t = make_kr(p, s, xs);
          Monomial m = phi_map(p, t);
          for (int i = 0; i < n; ++i) {
            StringData sd = string_data(p, m, i);
            REQUIRE(sd.eps == tuple_eps(p, t, i));
            REQUIRE(sd.phi == tuple_phi(p, t, i));
            auto dn = kr_f(p, t, i);
            auto mdn = f_std(p, m, i);
            REQUIRE(dn.has_value() == mdn.has_value());
            if (dn) REQUIRE(phi_map(p, *dn) == *mdn);
          }
          REQUIRE(mono_weight(p, m) == tuple_weight(p, t));
        }
    }
  }

  SECTION("column embedding retags into the row model") {
    CrystalParams p4 = make_params(4);
    TupleElement c = make_column(p4, 2, {1, 0, 1, 0});
    TupleElement k = col_embed(p4, c);
    REQUIRE(k.variant == TupleVariant::KR);
    REQUIRE(k.xs == c.xs);
    REQUIRE(k.s_or_r == 2);
    REQUIRE_THROWS_AS(col_embed(p4, k), CrystalError);
  }
}

TEST_CASE("ground-state elements and their paths") {
  CrystalParams p3 = make_params(3);

  REQUIRE(b_lambda(p3, Weight{{2, 0, 1}, 0}).xs == std::vector<long long>{0, 1, 2});
  REQUIRE(b_lambda(p3, Weight{{3, 0, 0}, 0}).xs == std::vector<long long>{0, 0, 3});
  REQUIRE(b_lambda(p3, Weight{{0, 1, 1}, 0}).xs == std::vector<long long>{1, 1, 0});

  SECTION("the path steps through rotated weights") {
    Weight lam{{2, 0, 0}, 0};
    GroundStatePath gs = ground_state_path(p3, lam, 3);
    REQUIRE(gs.steps.size() == 3);
    REQUIRE(gs.steps[0].xs == std::vector<long long>{0, 0, 2});
    REQUIRE(gs.steps[1].xs == std::vector<long long>{0, 2, 0});
    REQUIRE(gs.steps[2].xs == std::vector<long long>{2, 0, 0});
    REQUIRE(gs.tail == Weight{{2, 0, 0}, 0});

    SECTION("each step is the ground state of the successively rotated weight") {
      Weight mu = lam;
      for (const TupleElement& st : gs.steps) {
        REQUIRE(st == b_lambda(p3, mu));
        mu = rotate_weight(mu);
      }
      REQUIRE(gs.tail == mu);
    }
  }

  SECTION("ground-state statistics match the defining weight recursion") {
    for (int n : {2, 3, 5}) {
      CrystalParams p = make_params(n);
      for (const Weight& lam : dominant_weights_of_level(n, 3)) {
        TupleElement b = b_lambda(p, lam);
        Weight mu = rotate_weight(lam);
        for (int i = 0; i < n; ++i) {
          REQUIRE(tuple_phi(p, b, i) == pairing(i, lam));
          REQUIRE(tuple_eps(p, b, i) == pairing(i, mu));
        }
      }
    }
  }
}
