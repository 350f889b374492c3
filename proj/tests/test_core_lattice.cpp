#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "affcrys/affcrys.hpp"

using namespace affcrys;

namespace {

Monomial rand_monomial(std::mt19937_64& rng, int n, int max_abs_k = 3, int entries = 4, int max_e = 3) {
  std::uniform_int_distribution<int> di(0, n - 1);
  std::uniform_int_distribution<int> dk(-max_abs_k, max_abs_k);
  std::uniform_int_distribution<int> de(-max_e, max_e);
  Monomial m;
  for (int t = 0; t < entries; ++t) m = mono_mul(m, mono_y(di(rng), dk(rng), de(rng)));
  return m;
}

}  // namespace

TEST_CASE("parameter construction and the Cartan matrix") {
  CrystalParams p = make_params(3);
  REQUIRE(p.n == 3);
  REQUIRE(p.K == 1);
  REQUIRE(p.prev_shift == std::vector<long long>{1, 1, 1});
  REQUIRE(p.next_shift == std::vector<long long>{0, 0, 0});
  REQUIRE(p.is_default_orientation());

  SECTION("Cartan entries") {
    CrystalParams p2 = make_params(2);
    REQUIRE(p2.cartan(0, 0) == 2);
    REQUIRE(p2.cartan(0, 1) == -2);
    REQUIRE(p2.cartan(1, 0) == -2);
    CrystalParams p4 = make_params(4);
    REQUIRE(p4.cartan(0, 1) == -1);
    REQUIRE(p4.cartan(0, 3) == -1);
    REQUIRE(p4.cartan(0, 2) == 0);
    REQUIRE(p4.cartan(3, 0) == -1);
  }

  SECTION("rank below 2 is rejected") {
    REQUIRE_THROWS_AS(make_params(1), InvalidParams);
    REQUIRE_THROWS_AS(make_params(0), InvalidParams);
  }

  SECTION("orientation matrix equivalent to the default is accepted") {
    std::vector<std::vector<long long>> c = {{0, 1, 1, 1, 0},
                                             {0, 0, 1, 1, 1},
                                             {0, 0, 0, 1, 1},
                                             {0, 0, 0, 0, 1},
                                             {1, 0, 0, 0, 0}};
    CrystalParams q = make_params(5, c);
    REQUIRE(q == make_params(5));
  }

  SECTION("orientation matrix violating the edge sums is rejected") {
    std::vector<std::vector<long long>> c(3, std::vector<long long>(3, 0));
    REQUIRE_THROWS_AS(make_params(3, c), InvalidParams);
  }

  SECTION("explicit matrices at rank 2 are rejected") {
    std::vector<std::vector<long long>> c = {{0, 1}, {0, 0}};
    REQUIRE_THROWS_AS(make_params(2, c), InvalidParams);
  }
}

TEST_CASE("weights: level, pairing, rotation, enumeration") {
  Weight w{{2, 0, 1}, 0};
  REQUIRE(level(w) == 3);
  REQUIRE(pairing(0, w) == 2);
  REQUIRE(pairing(2, w) == 1);
  REQUIRE(is_dominant(w));
  REQUIRE(!is_dominant(Weight{{1, -1, 0}, 0}));

  REQUIRE(rotate_weight(w).lambda == std::vector<long long>{0, 1, 2});

  Weight a{{1, 2}, 3}, b{{4, -1}, -3};
  REQUIRE(add(a, b) == Weight{{5, 1}, 0});
  REQUIRE(sub(a, b) == Weight{{-3, 3}, 6});
  REQUIRE(classical_equal(Weight{{1, 2}, 0}, Weight{{1, 2}, 7}));
  REQUIRE(Weight{{1, 2}, 0} != Weight{{1, 2}, 7});

  auto lv2 = dominant_weights_of_level(3, 2);
  REQUIRE(lv2.size() == 6);  // compositions of 2 into 3 parts
  for (const auto& lam : lv2) {
    REQUIRE(level(lam) == 2);
    REQUIRE(is_dominant(lam));
  }

  CrystalParams p = make_params(4);
  Weight al0 = alpha_weight(p, 0);
  REQUIRE(al0.lambda == std::vector<long long>{2, -1, 0, -1});
  REQUIRE(al0.delta == 1);
  REQUIRE(alpha_weight(p, 2).delta == 0);

  Weight rt = weight_from_json(weight_to_json(w));
  REQUIRE(rt == w);
}

TEST_CASE("monomial arithmetic is canonical") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial a = rand_monomial(rng, 4), b = rand_monomial(rng, 4), c = rand_monomial(rng, 4);
    REQUIRE(mono_mul(a, b) == mono_mul(b, a));
    REQUIRE(mono_mul(mono_mul(a, b), c) == mono_mul(a, mono_mul(b, c)));
    REQUIRE(mono_mul(a, mono_pow(a, -1)) == mono_one());
    REQUIRE(mono_pow(a, 3) == mono_mul(a, mono_mul(a, a)));
    REQUIRE(tau(mono_mul(a, b), 2) == mono_mul(tau(a, 2), tau(b, 2)));
    REQUIRE(tau(tau(a, 5), -5) == a);
    Monomial rt = mono_from_json(mono_to_json(a));
    REQUIRE(rt == a);
    REQUIRE(mono_to_json(rt).dump() == mono_to_json(a).dump());
  }
  REQUIRE(display(mono_one()) == "1");
  Monomial m = mono_mul(mono_y(1, 0, 2), mono_y(0, 1, -1));
  REQUIRE(display(m) == "Y(1,0)^2*Y(0,1)^-1");

  CrystalParams p = make_params(3);
  Weight wm = mono_weight(p, m);
  REQUIRE(wm.lambda == std::vector<long long>{-1, 2, 0});
  REQUIRE(wm.delta == 0);

  Weight lam{{2, 0, 1}, 0};
  Monomial yl = y_lambda(p, lam);
  REQUIRE(yl == mono_mul(mono_y(0, 0, 2), mono_y(2, 0, 1)));
  REQUIRE_THROWS_AS(y_lambda(p, Weight{{1, -1, 0}, 0}), InvalidParams);
  REQUIRE_THROWS_AS(y_lambda(p, Weight{{1, 0, 0}, 2}), InvalidParams);
}

TEST_CASE("generator monomials") {
  CrystalParams p3 = make_params(3);
  REQUIRE(a_monomial(p3, 1, 0) ==
          mono_mul(mono_mul(mono_y(1, 0), mono_y(1, 1)), mono_mul(mono_y(0, 1, -1), mono_y(2, 0, -1))));
  REQUIRE(a_monomial(p3, 0, 0) ==
          mono_mul(mono_mul(mono_y(0, 0), mono_y(0, 1)), mono_mul(mono_y(2, 1, -1), mono_y(1, 0, -1))));

  SECTION("rank 2 keeps all four factors distinct under the default orientation") {
    CrystalParams p2 = make_params(2);
    Monomial a = a_monomial(p2, 1, 0);
    REQUIRE(a == mono_mul(mono_mul(mono_y(1, 0), mono_y(1, 1)), mono_mul(mono_y(0, 1, -1), mono_y(0, 0, -1))));
    REQUIRE(a.factors.size() == 4);
  }

  SECTION("weights of generators read off the Cartan matrix, any rank") {
    for (int n : {2, 3, 4, 5, 7}) {
      CrystalParams p = make_params(n);
      for (int i = 0; i < n; ++i)
        for (long long k : {-3LL, 0LL, 4LL}) {
          Weight w = mono_weight(p, a_monomial(p, i, k));
          for (int j = 0; j < n; ++j) REQUIRE(pairing(j, w) == p.cartan(j, i));
        }
    }
  }

  SECTION("inverse generators factor through consecutive X-variables") {
    for (int n : {2, 3, 5}) {
      CrystalParams p = make_params(n);
      for (int i = 0; i < n; ++i)
        for (long long k : {-1LL, 0LL, 2LL})
          REQUIRE(mono_pow(a_monomial(p, i, k), -1) ==
                  mono_mul(mono_pow(x_monomial(p, i, k), -1), x_monomial(p, i + 1, k)));
    }
  }

  SECTION("X-variables wrap modulo n") {
    CrystalParams p5 = make_params(5);
    REQUIRE(x_monomial(p5, 5, 0) == mono_mul(mono_y(4, 1, -1), mono_y(0, 0)));
    REQUIRE(x_monomial(p5, 5, 0) == x_monomial(p5, 0, 0));
    REQUIRE(x_monomial(p5, 1, 0) == mono_mul(mono_y(0, 1, -1), mono_y(1, 0)));
  }

  SECTION("seed monomials") {
    REQUIRE(seed_m1s(p3, 3) == mono_mul(mono_y(0, 1, -3), mono_y(1, 0, 3)));
    REQUIRE_THROWS_AS(seed_m1s(p3, 0), InvalidParams);
  }
}

TEST_CASE("X-factorization") {
  CrystalParams p3 = make_params(3);

  SECTION("worked example") {
    Monomial m =
        mono_mul(mono_mul(mono_y(0, 1, -2), mono_y(1, 0, 2)), mono_mul(mono_y(1, 1, -1), mono_y(2, 0, 1)));
    XFactorization fac = x_factorize(p3, m);
    REQUIRE(fac.exponents.size() == 2);
    REQUIRE(fac.exponents.at({0, 1}) == 2);
    REQUIRE(fac.exponents.at({0, 2}) == 1);
    REQUIRE(fac.expand(p3) == m);
    REQUIRE(display(fac) == "X(1,0)^2*X(2,0)");
  }

  SECTION("non-factorizable monomials are rejected") {
    REQUIRE(!try_x_factorize(p3, mono_y(0, 0)).has_value());
    REQUIRE_THROWS_AS(x_factorize(p3, mono_y(0, 0)), NotXFactorizable);
    REQUIRE_THROWS_AS(x_factorize(p3, mono_y(1, 2, 3)), NotXFactorizable);
  }

  SECTION("round trip on random X-products") {
    std::mt19937_64 rng(7);
    for (int n : {2, 3, 5}) {
      CrystalParams p = make_params(n);
      std::uniform_int_distribution<int> dj(1, n), dk(-2, 2), de(-2, 2);
      for (int trial = 0; trial < 100; ++trial) {
        XFactorization want;
        Monomial m;
        for (int t = 0; t < 3; ++t) {
          int j = dj(rng);
          long long k = dk(rng), e = de(rng);
          if (e == 0) continue;
          m = mono_mul(m, mono_pow(x_monomial(p, j, k), e));
        }
        auto fac = try_x_factorize(p, m);
        REQUIRE(fac.has_value());
        REQUIRE(fac->expand(p) == m);
      }
    }
  }

  SECTION("the identity factorizes with empty support") {
    auto fac = try_x_factorize(p3, mono_one());
    REQUIRE(fac.has_value());
    REQUIRE(fac->exponents.empty());
  }

  SECTION("coherent vectors") {
    Monomial m = x_power_product(p3, {-1, 1, 0});
    REQUIRE(coherent_vector(p3, m) == std::vector<long long>{-1, 1, 0});
    REQUIRE(coherent_vector(p3, mono_one()) == std::vector<long long>{0, 0, 0});
    // nonzero second index
    REQUIRE_THROWS_AS(coherent_vector(p3, x_monomial(p3, 1, 1)), NotInCoherentLattice);
    // nonzero exponent sum
    REQUIRE_THROWS_AS(coherent_vector(p3, x_monomial(p3, 1, 0)), NotInCoherentLattice);
    // not an X-product at all
    REQUIRE_THROWS_AS(coherent_vector(p3, mono_y(0, 0)), NotInCoherentLattice);
  }
}

TEST_CASE("classical root coordinates") {
  CrystalParams p3 = make_params(3);
  Weight base = zero_weight(3);
  base.lambda[1] = 3;

  auto c1 = classical_alpha_coords(p3, Weight{{-2, 1, 1}, 0}, base);
  REQUIRE(c1 == std::vector<Rational>{Rational(-1), Rational(0)});
  REQUIRE(all_nonpositive_integers(c1));

  auto c2 = classical_alpha_coords(p3, Weight{{0, -3, 3}, 0}, base);
  REQUIRE(c2 == std::vector<Rational>{Rational(-3), Rational(0)});

  auto c3 = classical_alpha_coords(p3, base, base);
  REQUIRE(c3 == std::vector<Rational>{Rational(0), Rational(0)});

  SECTION("non-integral coordinates are flagged") {
    Weight w = zero_weight(3);
    w.lambda = {0, 4, 0};
    auto c = classical_alpha_coords(p3, w, base);
    REQUIRE(!all_nonpositive_integers(c));
  }

  SECTION("coordinates solve the Cartan system for larger rank") {
    CrystalParams p5 = make_params(5);
    Weight b5 = zero_weight(5);
    b5.lambda[1] = 2;
    Weight w = zero_weight(5);
    w.lambda = {1, -1, 1, 0, 1};
    auto c = classical_alpha_coords(p5, w, b5);
    // Re-substitute: v_i = sum_j A_{ij} c_j with A the finite Cartan matrix.
    for (int r = 0; r < 4; ++r) {
      Rational acc(0);
      for (int j = 0; j < 4; ++j) {
        long long a = r == j ? 2 : (r == j + 1 || j == r + 1 ? -1 : 0);
        acc += Rational(a) * c[static_cast<std::size_t>(j)];
      }
      REQUIRE(acc == Rational(w.lambda[static_cast<std::size_t>(r + 1)] - b5.lambda[static_cast<std::size_t>(r + 1)]));
    }
  }
}

TEST_CASE("string data and the plain operators") {
  CrystalParams p3 = make_params(3);
  Monomial seed = seed_m1s(p3, 3);

  SECTION("worked string data") {
    StringData s0 = string_data(p3, seed, 0);
    REQUIRE(s0.eps == 3);
    REQUIRE(s0.phi == 0);
    REQUIRE(s0.k_e == 0);
    REQUIRE(!s0.k_f);
    StringData s1 = string_data(p3, seed, 1);
    REQUIRE(s1.eps == 0);
    REQUIRE(s1.phi == 3);
    REQUIRE(!s1.k_e);
    REQUIRE(s1.k_f == 0);
    StringData id = string_data(p3, mono_one(), 2);
    REQUIRE(id.eps == 0);
    REQUIRE(id.phi == 0);
    REQUIRE(!id.k_e);
    REQUIRE(!id.k_f);
  }

  SECTION("argmax plateaus extend past support gaps") {
    // Row 0 support {0: +1, 5: -1}: the tail sum attains its minimum on all
    // of [0,4], so the raising index is 4, not a support point.
    Monomial m = mono_mul(mono_y(0, 0, 1), mono_y(0, 5, -1));
    StringData sd = string_data(p3, m, 0);
    REQUIRE(sd.eps == 1);
    REQUIRE(sd.k_e == 4);
    REQUIRE(sd.phi == 1);
    REQUIRE(sd.k_f == 0);
  }

  SECTION("operator/statistics consistency on random monomials") {
    std::mt19937_64 rng(99);
    for (int n : {2, 3, 4}) {
      CrystalParams p = make_params(n);
      for (int trial = 0; trial < 300; ++trial) {
        Monomial m = rand_monomial(rng, n);
        for (int i = 0; i < n; ++i) {
          StringData sd = string_data(p, m, i);
          REQUIRE(sd.phi - sd.eps == pairing(i, mono_weight(p, m)));
          REQUIRE(sd.k_e.has_value() == (sd.eps > 0));
          REQUIRE(sd.k_f.has_value() == (sd.phi > 0));
          auto up = e_std(p, m, i);
          REQUIRE(up.has_value() == (sd.eps > 0));
          if (up) {
            // mutual inverse, and the statistics move by one
            auto back = f_std(p, *up, i);
            REQUIRE(back.has_value());
            REQUIRE(*back == m);
            StringData su = string_data(p, *up, i);
            REQUIRE(su.eps == sd.eps - 1);
            REQUIRE(su.phi == sd.phi + 1);
          }
          auto dn = f_std(p, m, i);
          REQUIRE(dn.has_value() == (sd.phi > 0));
          if (dn) {
            auto back = e_std(p, *dn, i);
            REQUIRE(back.has_value());
            REQUIRE(*back == m);
            Weight wu = mono_weight(p, m), wd = mono_weight(p, *dn);
            for (int j = 0; j < n; ++j) REQUIRE(pairing(j, wd) == pairing(j, wu) - p.cartan(j, i));
          }
        }
      }
    }
  }
}
