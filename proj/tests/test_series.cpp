#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratsemi/errors.hpp"
#include "ratsemi/series.hpp"

using namespace ratsemi;

namespace {

Polynomial P(std::initializer_list<long> ascending) {
  std::vector<Coeff> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("jet windows and arithmetic") {
  LaurentJet z = LaurentJet::variable(-4);
  CHECK(z.hi() == 1);
  CHECK(z.lo() == -4);
  CHECK(z.coeff(1) == Coeff(1));
  CHECK(z.coeff(0).is_zero());
  CHECK(z.coeff(7).is_zero());  // above the window: exactly zero
  CHECK_THROWS_AS(z.coeff(-5), error);

  LaurentJet p = LaurentJet::from_polynomial(P({1, 0, 3}), -2);
  CHECK(p.coeff(2) == Coeff(3));
  CHECK(p.coeff(0) == Coeff(1));
  CHECK(p.coeff(-1).is_zero());

  LaurentJet sum = z + p;
  CHECK(sum.coeff(2) == Coeff(3));
  CHECK(sum.coeff(1) == Coeff(1));
  CHECK(sum.lo() == -2);

  LaurentJet prod = z * p;  // 3z^3 + z
  CHECK(prod.coeff(3) == Coeff(3));
  CHECK(prod.coeff(2).is_zero());
  CHECK(prod.coeff(1) == Coeff(1));
}

TEST_CASE("jet inverse is the geometric expansion") {
  // 1/(z - 1) = z^-1 + z^-2 + z^-3 + ...
  LaurentJet f = LaurentJet::from_polynomial(P({-1, 1}), -6);
  LaurentJet inv = f.inverse();
  CHECK(inv.hi() == -1);
  for (long e = -1; e >= inv.lo(); --e) CHECK(inv.coeff(e) == Coeff(1));

  LaurentJet one = f * inv;
  CHECK(one.coeff(0) == Coeff(1));
  CHECK(one.is_zero_down_to(1));
  for (long e = -1; e >= one.lo(); --e) CHECK(one.coeff(e).is_zero());

  LaurentJet zero_lead = LaurentJet::from_polynomial(Polynomial::zero(), -2);
  CHECK_THROWS_AS(zero_lead.inverse(), error);
}

TEST_CASE("jet powers agree with polynomial powers") {
  Polynomial q = P({2, -1, 1});
  LaurentJet jq = LaurentJet::from_polynomial(q, -7);
  LaurentJet cube = jq.pow(3);
  CHECK(cube.lo() <= 0);
  Polynomial ref = q.pow(3);
  for (long e = cube.hi(); e >= 0; --e) CHECK(cube.coeff(e) == ref.coeff(e));
  for (long e = -1; e >= cube.lo(); --e) CHECK(cube.coeff(e).is_zero());
}

TEST_CASE("conjugating tail vanishes for scaled power maps") {
  for (auto base : {P({0, 0, 1}), P({0, 0, 0, 1}), P({0, 0, 0, 2})}) {
    auto tail = conjugating_tail(base, 10);
    for (const auto& c : tail) CHECK(c.is_zero());
  }
}

TEST_CASE("conjugating tail for z^2 + 1") {
  auto tail = conjugating_tail(P({1, 0, 1}), 8);
  // phi(z) = z + (1/2)/z - (1/8)/z^3 + ...: odd-index entries vanish by parity.
  CHECK(tail[0].is_zero());
  CHECK(tail[1] == Coeff::from_string("1/2"));
  CHECK(tail[2].is_zero());
}

TEST_CASE("conjugating tail for z^2 - 2 matches the closed form") {
  // Here the inverse coordinate is exactly w + 1/w, so the direct expansion
  // phi(z) = z - 1/z - 1/z^3 - 2/z^5 - ... is known independently.
  auto tail = conjugating_tail(P({-2, 0, 1}), 7);
  CHECK(tail[0].is_zero());
  CHECK(tail[1] == Coeff(-1));
  CHECK(tail[2].is_zero());
  CHECK(tail[3] == Coeff(-1));
  CHECK(tail[4].is_zero());
  CHECK(tail[5] == Coeff(-2));

  // And the inverse tail must reproduce w + 1/w on the nose.
  auto inv = inverse_tail(tail, 7);
  CHECK(inv[0].is_zero());
  CHECK(inv[1] == Coeff(1));
  for (size_t j = 2; j < inv.size(); ++j) CHECK(inv[j].is_zero());
}

TEST_CASE("inverse tail round-trips the coordinate") {
  Polynomial base = P({3, 2, 0, 1});  // centered cubic, non-symmetric
  long order = 9;
  auto tail = conjugating_tail(base, order);
  auto inv = inverse_tail(tail, order);

  LaurentJet var = LaurentJet::variable(1 - order - 2);
  LaurentJet phi = apply_tail(tail, var);
  LaurentJet back = apply_tail(inv, phi);
  CHECK(back.coeff(1) == Coeff(1));
  for (long e = 0; e >= 1 - order; --e) CHECK(back.coeff(e).is_zero());
}

TEST_CASE("bottcher_expand guards its normal form") {
  CHECK_THROWS_AS(bottcher_expand(P({0, 0, 2}), 5), invalid_input_error);   // not monic
  CHECK_THROWS_AS(bottcher_expand(P({0, 1, 1, 1}), 5), invalid_input_error);  // not centered
  CHECK_THROWS_AS(bottcher_expand(P({0, 1}), 5), invalid_input_error);      // degree 1

  BottcherSeries s = bottcher_expand(P({1, 0, 1}), 6);
  CHECK(s.truncation_order == 6);
  CHECK(s.coeffs.size() == 6);
  CHECK(s.coeffs[1] == Coeff::from_string("1/2"));
}

TEST_CASE("scaled conjugation identity for a non-monic base") {
  // P = 2z^3 + z: phi o P must equal 2 * phi^3 through the window.
  Polynomial base = P({0, 1, 0, 2});
  long order = 8;
  auto tail = conjugating_tail(base, order);
  LaurentJet jp = LaurentJet::from_polynomial(base, -order - 3);
  LaurentJet lhs = apply_tail(tail, jp);
  LaurentJet rhs = apply_tail(tail, LaurentJet::variable(1 - order - 3)).pow(3).scale(Coeff(2));
  LaurentJet diff = lhs - rhs;
  CHECK(diff.is_zero_down_to(3 - order));
}
