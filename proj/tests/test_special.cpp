#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratsemi/errors.hpp"
#include "ratsemi/special.hpp"

using namespace ratsemi;

namespace {

Polynomial P(std::initializer_list<long> ascending) {
  std::vector<Coeff> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("chebyshev values and composition law") {
  CHECK(chebyshev(1).str() == "z");
  CHECK(chebyshev(2).str() == "2*z^2 - 1");
  CHECK(chebyshev(3).str() == "4*z^3 - 3*z");
  CHECK(chebyshev(4).str() == "8*z^4 - 8*z^2 + 1");
  CHECK_THROWS_AS(chebyshev(0), invalid_input_error);

  // T_m o T_n = T_mn on a small grid.
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned n = 1; n <= 5; ++n)
      CHECK(chebyshev(m).compose(chebyshev(n)) == chebyshev(m * n));

  // Defining property at rational cosine-like points: T_n((t + 1/t)/2)
  // equals (t^n + t^-n)/2.
  Coeff t(3);
  for (unsigned n = 2; n <= 6; ++n) {
    Coeff x = (t + t.inverse()) / Coeff(2);
    Coeff expect = (t.pow(n) + t.pow(-static_cast<long>(n))) / Coeff(2);
    CHECK(chebyshev(n).eval(x) == expect);
  }
}

TEST_CASE("power maps") {
  CHECK(power_map(3).str() == "z^3");
  CHECK(power_map(1).str() == "z");
  CHECK(power_map(-2).str() == "(1)/(z^2)");
  CHECK_THROWS_AS(power_map(0), invalid_input_error);
  // z^-2 o z^-3 = z^6
  CHECK(compose(power_map(-2), power_map(-3)) == power_map(6));
}

TEST_CASE("power conjugates are recognized with exact witnesses") {
  SUBCASE("pure power") {
    auto rep = is_special_polynomial(P({0, 0, 0, 1}));
    CHECK(rep.kind == SpecialKind::power_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->to_rational().str() == "z");
  }
  SUBCASE("translated power (z+1)^4 - 1") {
    Polynomial shifted = Polynomial{Coeff(1), Coeff(1)}.pow(4) - Polynomial::one();
    auto rep = is_special_polynomial(shifted);
    CHECK(rep.kind == SpecialKind::power_conjugate);
    REQUIRE(rep.witness.has_value());
    RationalFunction w = rep.witness->to_rational();
    CHECK(conjugate(RationalFunction(shifted), *rep.witness) ==
          RationalFunction(P({0, 0, 0, 0, 1})));
    CHECK(w.str() == "z + 1");
  }
  SUBCASE("scaled power with rational scaling witness") {
    auto rep = is_special_polynomial(P({0, 0, 2}));  // 2z^2, witness 2z
    CHECK(rep.kind == SpecialKind::power_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(conjugate(RationalFunction(P({0, 0, 2})), *rep.witness) ==
          RationalFunction(P({0, 0, 1})));
  }
  SUBCASE("power class without rational witness") {
    // 2z^3 needs a^2 = 2; the class is decided, the witness is withheld.
    auto rep = is_special_polynomial(P({0, 0, 0, 2}));
    CHECK(rep.kind == SpecialKind::power_conjugate);
    CHECK(!rep.witness.has_value());
  }
}

TEST_CASE("chebyshev conjugates") {
  SUBCASE("z^3 - 3z is T_3 scaled by one half") {
    auto rep = is_special_polynomial(P({0, -3, 0, 1}));
    CHECK(rep.kind == SpecialKind::chebyshev_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(conjugate(RationalFunction(P({0, -3, 0, 1})), *rep.witness) ==
          RationalFunction(chebyshev(3)));
    CHECK(rep.witness->to_rational().str() == "1/2*z");
  }
  SUBCASE("z^2 - 2 is T_2 conjugated") {
    auto rep = is_special_polynomial(P({-2, 0, 1}));
    CHECK(rep.kind == SpecialKind::chebyshev_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(conjugate(RationalFunction(P({-2, 0, 1})), *rep.witness) ==
          RationalFunction(chebyshev(2)));
  }
  SUBCASE("negative chebyshev in odd degree is a distinct class") {
    auto rep = is_special_polynomial(-chebyshev(3));
    CHECK(rep.kind == SpecialKind::negative_chebyshev_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(conjugate(RationalFunction(-chebyshev(3)), *rep.witness) ==
          RationalFunction(-chebyshev(3)));
  }
  SUBCASE("negative chebyshev in even degree folds into the chebyshev class") {
    auto rep = is_special_polynomial(-chebyshev(2));
    CHECK(rep.kind == SpecialKind::chebyshev_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(conjugate(RationalFunction(-chebyshev(2)), *rep.witness) ==
          RationalFunction(chebyshev(2)));
  }
  SUBCASE("T_4 itself") {
    auto rep = is_special_polynomial(chebyshev(4));
    CHECK(rep.kind == SpecialKind::chebyshev_conjugate);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->to_rational().str() == "z");
  }
}

TEST_CASE("non-special polynomials and rational inputs") {
  CHECK(is_special_polynomial(P({1, 0, 1})).kind == SpecialKind::not_special_polynomial);
  CHECK(is_special_polynomial(P({0, -2, 0, 1})).kind == SpecialKind::not_special_polynomial);
  CHECK(is_special_polynomial(P({2, 2, 0, 0, 1})).kind == SpecialKind::not_special_polynomial);
  CHECK(is_special(RationalFunction(Polynomial::one(), P({0, 0, 0, 1}))).kind ==
        SpecialKind::undecided_rational);
  CHECK_THROWS_AS(is_special_polynomial(P({0, 1})), invalid_input_error);
  CHECK_THROWS_AS(is_special(RationalFunction::identity()), invalid_input_error);
}

TEST_CASE("kind is invariant under random rational affine conjugation") {
  std::mt19937 rng(20260822);
  std::vector<Polynomial> seeds = {
      P({0, 0, 0, 1}),        // power class
      P({0, -3, 0, 1}),       // chebyshev class
      -chebyshev(3),          // negative chebyshev class
      P({1, 0, 1}),           // not special
  };
  std::vector<SpecialKind> kinds;
  for (const auto& s : seeds) kinds.push_back(is_special_polynomial(s).kind);
  for (int trial = 0; trial < 25; ++trial) {
    Mobius mu = testutil::random_affine(rng);
    for (size_t i = 0; i < seeds.size(); ++i) {
      RationalFunction conj = conjugate(RationalFunction(seeds[i]), mu);
      REQUIRE(conj.is_polynomial());
      CHECK(is_special_polynomial(conj.num()).kind == kinds[i]);
    }
  }
}

TEST_CASE("witness direction matches the report contract") {
  // Whenever a witness is attached, conjugating the *input* by it lands
  // exactly on the normal form.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Mobius mu = testutil::random_affine(rng);
    for (unsigned n : {2u, 3u, 4u}) {
      Polynomial base = chebyshev(n);
      RationalFunction conj = conjugate(RationalFunction(base), mu);
      auto rep = is_special_polynomial(conj.num());
      bool neg = rep.kind == SpecialKind::negative_chebyshev_conjugate;
      CHECK((rep.kind == SpecialKind::chebyshev_conjugate || neg));
      if (rep.witness) {
        Polynomial target = neg ? -base : base;
        CHECK(conjugate(conj, *rep.witness) == RationalFunction(target));
      }
    }
  }
}
