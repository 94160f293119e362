// Iterate-equality systems, fiber-pair constructions from even functions,
// common iterates, reversibility witnesses, and word relations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <utility>

#include "helpers.hpp"
#include "ratsemi/dynamics.hpp"
#include "ratsemi/errors.hpp"
#include "ratsemi/poly.hpp"
#include "ratsemi/rational_fn.hpp"
#include "ratsemi/special.hpp"

using namespace ratsemi;

namespace {

const RationalFunction kSq(Polynomial{0, 0, 1});        // z^2
const RationalFunction kNegSq(Polynomial{0, 0, -1});    // -z^2
const RationalFunction kCube(Polynomial{0, 0, 0, 1});   // z^3
const RationalFunction kQuart(Polynomial{0, 0, 0, 0, 1});

RationalFunction word_value(const std::string& w, const RationalFunction& a,
                            const RationalFunction& b) {
  RationalFunction v = RationalFunction::identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    v = compose(*it == 'A' ? a : b, v);
  return v;
}

}  // namespace

TEST_CASE("check_sisis on the frozen pairs") {
  const RationalFunction p(Polynomial{1, 0, 1});
  CHECK(check_sisis(p, p, 1, 1));
  CHECK(check_sisis(kSq, kNegSq, 1, 1));
  CHECK_FALSE(check_sisis(kSq, kCube, 1, 1));
  CHECK_THROWS_AS(check_sisis(RationalFunction::identity(), p, 1, 1),
                  invalid_input_error);
  CHECK_THROWS_AS(check_sisis(p, p, 0, 1), invalid_input_error);
}

TEST_CASE("search_sisis scans the degree-matched pairs") {
  const RationalFunction p(Polynomial{-1, 0, 1});
  const auto self = search_sisis(p, p, 2);
  REQUIRE(self.has_value());
  CHECK(self->k == 1);
  CHECK(self->l == 1);

  const auto signs = search_sisis(kSq, kNegSq, 2);
  REQUIRE(signs.has_value());
  CHECK(signs->k == 1);
  CHECK(signs->l == 1);

  // 2^k = 3^l has no solution, so nothing is ever composed.
  CHECK(!search_sisis(RationalFunction(Polynomial{1, 0, 1}), kCube, 4)
             .has_value());

  // Unequal degrees walk to the first exponent pair on the degree curve.
  const auto skew = search_sisis(kSq, kQuart, 3);
  REQUIRE(skew.has_value());
  CHECK(skew->k == 2);
  CHECK(skew->l == 1);
}

TEST_CASE("check_eq_system") {
  const RationalFunction f(Polynomial{1, 0, 1});
  CHECK(check_eq_system(f, f));
  CHECK(check_eq_system(kSq, kNegSq));
  CHECK_FALSE(check_eq_system(kSq, f));
}

TEST_CASE("build_from_fiber_pair") {
  const RationalFunction id = RationalFunction::identity();
  const RationalFunction neg(Polynomial{0, -1});

  const auto [f1, g1] = build_from_fiber_pair(kSq, id, neg);
  CHECK(f1 == kSq);
  CHECK(g1 == kNegSq);

  const RationalFunction shifted(Polynomial{1, 0, 1});
  const auto [f2, g2] = build_from_fiber_pair(shifted, id, id);
  CHECK(f2 == shifted);
  CHECK(g2 == shifted);

  const auto [f3, g3] = build_from_fiber_pair(shifted, id, neg);
  CHECK(f3 == shifted);
  CHECK(g3 == RationalFunction(Polynomial{-1, 0, -1}));
  CHECK(check_eq_system(f3, g3));

  CHECK_THROWS_AS(build_from_fiber_pair(kSq, id, RationalFunction(Polynomial{1, 1})),
                  invalid_input_error);
}

TEST_CASE("even_construction walks the odd right factors") {
  // U = z + 1: the only splitting of z^2 + 1 with a non-even right factor
  // is the trivial one.
  const auto lin = even_construction(RationalFunction(Polynomial{1, 1}), 0);
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].a == RationalFunction(Polynomial{1, 0, 1}));
  CHECK(lin[0].x == RationalFunction::identity());
  CHECK(lin[0].y == RationalFunction(Polynomial{0, -1}));

  // U = z^2: F = z^4; the splitting through z^2 is even and drops out.
  const auto quart = even_construction(kSq, 0);
  REQUIRE(quart.size() == 1);
  CHECK(quart[0].a == kQuart);

  // U = z^2 + z: F = z^4 + z^2; again only the trivial right factor.
  const auto mixed = even_construction(RationalFunction(Polynomial{0, 1, 1}), 0);
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].a == RationalFunction(Polynomial{0, 0, 1, 0, 1}));

  // U = y^3 + 2y^2 + y: F = (z^3 + z)^2 has the genuinely odd cubic right
  // factor z^3 + z under A = z^2.
  const auto cubic = even_construction(RationalFunction(Polynomial{0, 1, 2, 1}), 0);
  REQUIRE(cubic.size() == 2);
  CHECK(cubic[0].x == RationalFunction::identity());
  CHECK(cubic[1].a == kSq);
  CHECK(cubic[1].x == RationalFunction(Polynomial{0, 1, 0, 1}));
  CHECK(cubic[1].y == RationalFunction(Polynomial{0, -1, 0, -1}));
  const auto [f, g] = build_from_fiber_pair(cubic[1].a, cubic[1].x, cubic[1].y);
  CHECK(f == RationalFunction(Polynomial{0, 0, 1, 0, 0, 0, 1}));
  CHECK(g == RationalFunction(Polynomial{0, 0, -1, 0, 0, 0, -1}));
  CHECK(check_eq_system(f, g));

  // Degree filter.
  CHECK(even_construction(RationalFunction(Polynomial{0, 1, 2, 1}), 3).size() == 1);
  CHECK(even_construction(RationalFunction(Polynomial{1, 1}), 2).empty());

  CHECK_THROWS_AS(
      even_construction(RationalFunction(Polynomial{1, 0, 1}, Polynomial{0, 1}), 0),
      invalid_input_error);
}

TEST_CASE("common_iterate") {
  CHECK(common_iterate(kSq, kQuart, 3) == std::pair<long, long>(2, 1));
  CHECK(common_iterate(kQuart, kSq, 4) == std::pair<long, long>(1, 2));
  const RationalFunction p(Polynomial{1, 0, 1});
  CHECK(common_iterate(p, p, 2) == std::pair<long, long>(1, 1));
  CHECK(!common_iterate(RationalFunction(chebyshev(2)),
                        RationalFunction(chebyshev(3)), 5)
             .has_value());
  // -z^3 and z^3 agree from the second iterate on.
  CHECK(common_iterate(RationalFunction(Polynomial{0, 0, 0, -1}), kCube, 3) ==
        std::pair<long, long>(2, 2));
  // Same degree but never equal: distinct quadratics.
  CHECK(!common_iterate(p, kSq, 3).has_value());
}

TEST_CASE("reversibility witnesses") {
  ReversibilityWitness left{ReversibilitySide::left, kQuart, kSq};
  CHECK(verify_reversibility(kSq, kQuart, left));
  ReversibilityWitness right{ReversibilitySide::right, kSq,
                             RationalFunction::identity()};
  CHECK(verify_reversibility(kSq, kQuart, right));
  ReversibilityWitness bad{ReversibilitySide::left, RationalFunction::identity(),
                           RationalFunction::identity()};
  CHECK_FALSE(verify_reversibility(RationalFunction(Polynomial{1, 0, 1}), kSq, bad));

  CHECK(right_reversibility_equalities(kSq, kSq, 2) ==
        std::pair<long, long>(1, 1));
  CHECK(right_reversibility_equalities(kSq, kNegSq, 2) ==
        std::pair<long, long>(1, 1));
  CHECK(!right_reversibility_equalities(RationalFunction(Polynomial{1, 0, 1}),
                                        RationalFunction(Polynomial{-1, 0, 1}), 3)
             .has_value());
}

TEST_CASE("free_pair_certificate finds word relations") {
  const auto powers = free_pair_certificate(kSq, kQuart, 2);
  REQUIRE(powers.has_value());
  CHECK(powers->word1 == "B");
  CHECK(powers->word2 == "AA");
  CHECK(powers->value == kQuart);
  CHECK(word_value(powers->word1, kSq, kQuart) ==
        word_value(powers->word2, kSq, kQuart));

  const auto signs = free_pair_certificate(kSq, kNegSq, 2);
  REQUIRE(signs.has_value());
  CHECK(signs->word1 == "AA");
  CHECK(signs->word2 == "AB");
  CHECK(word_value(signs->word1, kSq, kNegSq) ==
        word_value(signs->word2, kSq, kNegSq));

  // Commuting Chebyshev generators collide at AB = BA.
  const RationalFunction t2(chebyshev(2));
  const RationalFunction t3(chebyshev(3));
  const auto cheb = free_pair_certificate(t2, t3, 2);
  REQUIRE(cheb.has_value());
  CHECK(cheb->word1 == "AB");
  CHECK(cheb->word2 == "BA");

  CHECK(!free_pair_certificate(RationalFunction(Polynomial{1, 0, 1}),
                               RationalFunction(Polynomial{-1, 0, 1}), 3)
             .has_value());
  CHECK_THROWS_AS(
      free_pair_certificate(RationalFunction::identity(), kSq, 2),
      invalid_input_error);
}

TEST_CASE("random spot checks") {
  std::mt19937 rng(771241);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial p = testutil::random_monic_poly(rng, 2 + trial % 2);
    const RationalFunction f(p);
    CHECK(check_sisis(f, f, 1, 1));
    CHECK(check_eq_system(f, f));
    const auto w = search_sisis(f, f, 2);
    REQUIRE(w.has_value());
    CHECK(w->k == 1);
  }
  // Every emitted even-construction triple passes the pair system after
  // the fiber-pair construction.
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial u = testutil::random_poly(rng, 1 + trial % 3);
    if (u.degree() < 1) continue;
    for (const FiberTriple& t : even_construction(RationalFunction(u), 0)) {
      const auto [f, g] = build_from_fiber_pair(t.a, t.x, t.y);
      CHECK(check_eq_system(f, g));
    }
  }
}
