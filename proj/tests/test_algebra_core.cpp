#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratsemi/errors.hpp"
#include "ratsemi/rational_fn.hpp"

using namespace ratsemi;
using ratsemi::testutil::random_affine;
using ratsemi::testutil::random_poly;

namespace {
Polynomial P(std::initializer_list<long> ascending) {
  std::vector<Coeff> c;
  for (long v : ascending) c.push_back(Coeff(v));
  return Polynomial(std::move(c));
}
RationalFunction RF(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RationalFunction(P(num), P(den));
}
}  // namespace

TEST_CASE("normalization") {
  // (2z^2, 2z) reduces to z with monic denominator.
  CHECK(RF({0, 0, 2}, {0, 2}) == RationalFunction::identity());
  // (4z^3 - 3z, 2) -> (2z^3 - 3/2 z)/1.
  const RationalFunction f = RF({0, -3, 0, 4}, {2});
  CHECK(f.is_polynomial());
  CHECK(f.num().coeff(3) == Coeff(2));
  CHECK(f.num().coeff(1) == Coeff::from_string("-3/2"));
  // (z^2 - 1, z - 1) -> z + 1.
  CHECK(RF({-1, 0, 1}, {-1, 1}) == RationalFunction(P({1, 1})));
  CHECK_THROWS_AS(RationalFunction(P({1}), Polynomial::zero()), invalid_input_error);
}

TEST_CASE("degrees") {
  CHECK(RationalFunction(P({7})).degree() == 0);
  CHECK(RationalFunction(P({0, 0, 1})).degree() == 2);
  CHECK(RF({1}, {0, 0, 1}).degree() == 2);
  CHECK(RF({1, 1}, {0, 0, 0, 2}).degree() == 3);
  CHECK(RationalFunction().degree() == 0);  // zero function is a constant
}

TEST_CASE("composition matches the classical Chebyshev example") {
  const RationalFunction t2(P({-1, 0, 2})), t3(P({0, -3, 0, 4}));
  const RationalFunction t6 = compose(t2, t3);
  CHECK(t6 == RationalFunction(P({-1, 0, 18, 0, -48, 0, 32})));
  CHECK(compose(t3, t2) == t6);
}

TEST_CASE("composition of genuine rational functions") {
  // z^2 after (z+1)/(z-1) -> (z+1)^2/(z-1)^2.
  const RationalFunction sq(P({0, 0, 1}));
  const RationalFunction mo = RF({1, 1}, {-1, 1});
  const RationalFunction c = compose(sq, mo);
  CHECK(c == RF({1, 2, 1}, {1, -2, 1}));
  CHECK(c.degree() == 2);
  // 1/z is an involution.
  const RationalFunction inv = RF({1}, {0, 1});
  CHECK(compose(inv, inv) == RationalFunction::identity());
}

TEST_CASE("composition with constants") {
  const RationalFunction sq(P({0, 0, 1}));
  CHECK(compose(sq, RationalFunction::constant(Coeff(3))) ==
        RationalFunction::constant(Coeff(9)));
  CHECK(compose(RationalFunction::constant(Coeff(5)), sq) ==
        RationalFunction::constant(Coeff(5)));
  // Constant at a pole degenerates to the constant infinity: rejected.
  const RationalFunction inv = RF({1}, {0, 1});
  CHECK_THROWS_AS(compose(inv, RationalFunction::constant(Coeff(0))),
                  invalid_input_error);
}

TEST_CASE("iterates") {
  const RationalFunction f(P({-1, 0, 1}));  // z^2 - 1
  CHECK(iterate(f, 1) == f);
  CHECK(iterate(f, 2) == RationalFunction(P({0, 0, -2, 0, 1})));  // z^4 - 2z^2
  CHECK_THROWS_AS(iterate(RationalFunction(P({0, 0, 1})), 13), degree_cap_error);
  CHECK(iterate(RationalFunction(P({0, 0, 1})), 6, 100).degree() == 64);
  CHECK_THROWS_AS(iterate(f, 0), invalid_input_error);
}

TEST_CASE("conjugation") {
  // (2z) conj 4z^3-3z -> z^3 - 3z.
  const RationalFunction t3(P({0, -3, 0, 4}));
  CHECK(conjugate(t3, Mobius::affine(Coeff(2), Coeff(0))) ==
        RationalFunction(P({0, -3, 0, 1})));
  // (z+1) conj z^2 -> z^2 - 2z + 2.
  CHECK(conjugate(RationalFunction(P({0, 0, 1})), Mobius::affine(Coeff(1), Coeff(1))) ==
        RationalFunction(P({2, -2, 1})));
  // Conjugation preserves degree for a non-affine Mobius as well.
  const Mobius inv(Coeff(0), Coeff(1), Coeff(1), Coeff(0));  // 1/z
  CHECK(conjugate(t3, inv).degree() == 3);
}

TEST_CASE("evaluation") {
  const RationalFunction t2(P({-1, 0, 2}));
  CHECK(*t2.eval(Coeff::from_string("1/2")) == Coeff::from_string("-1/2"));
  const RationalFunction inv = RF({1}, {-1, 1});  // 1/(z-1)
  CHECK_FALSE(inv.eval(Coeff(1)).has_value());
  CHECK(*inv.eval(Coeff(3)) == Coeff::from_string("1/2"));
}

TEST_CASE("mobius algebra") {
  const Mobius m(Coeff(2), Coeff(1), Coeff(1), Coeff(1));
  CHECK(m.compose(m.inverse()) == Mobius::identity());
  CHECK(m.inverse().compose(m) == Mobius::identity());
  CHECK(Mobius::from_rational(m.to_rational()) == m);
  CHECK_THROWS_AS(Mobius(Coeff(1), Coeff(2), Coeff(1), Coeff(2)), invalid_input_error);
  CHECK_THROWS_AS(Mobius::from_rational(RationalFunction(P({0, 0, 1}))),
                  invalid_input_error);
  CHECK(*m.apply(Coeff(1)) == Coeff::from_string("3/2"));
  CHECK_FALSE(m.apply(Coeff(-1)).has_value());
}

TEST_CASE("property: degree multiplicativity") {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial fn = random_poly(rng, deg(rng)), gn = random_poly(rng, deg(rng));
    Polynomial fd = trial % 3 == 0 ? random_poly(rng, deg(rng) - 1) : Polynomial::one();
    Polynomial gd = trial % 4 == 0 ? random_poly(rng, deg(rng) - 1) : Polynomial::one();
    if (fd.is_zero()) fd = Polynomial::one();
    if (gd.is_zero()) gd = Polynomial::one();
    const RationalFunction f(fn, fd), g(gn, gd);
    if (f.degree() == 0 || g.degree() == 0) continue;
    CHECK(compose(f, g).degree() == f.degree() * g.degree());
  }
}

TEST_CASE("property: associativity of composition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const RationalFunction f(random_poly(rng, 2)), g(random_poly(rng, 2)),
        h(random_poly(rng, 2));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("property: right cancellativity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction x(random_poly(rng, 1 + trial % 3)),
        y(random_poly(rng, 1 + (trial + 1) % 3)), a(random_poly(rng, 2));
    if (x == y) continue;
    CHECK(compose(x, a) != compose(y, a));
  }
}

TEST_CASE("property: normalization is idempotent and representation-independent") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial n = random_poly(rng, 3), d = random_poly(rng, 2),
                     h = random_poly(rng, 2);
    const RationalFunction f(n, d), g(n * h, d * h);
    CHECK(f == g);
  }
}

TEST_CASE("property: conjugation is an action") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const RationalFunction f(random_poly(rng, 3));
    const Mobius m1 = random_affine(rng), m2 = random_affine(rng);
    CHECK(conjugate(conjugate(f, m1), m2) == conjugate(f, m2.compose(m1)));
    CHECK(conjugate(conjugate(f, m1), m1.inverse()) == f);
  }
}
