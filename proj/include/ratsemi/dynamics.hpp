#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratsemi/rational_fn.hpp"

namespace ratsemi {

// Witness that X and P generate a pair of commuting-iterate equalities:
// X^(2k) = X^k o P^l and P^(2l) = P^l o X^k.  Search routines only hand
// these out after checking both equalities exactly.
struct SisisWitness {
  long k = 0;
  long l = 0;
};

enum class ReversibilitySide { left, right };

// A claimed factorization witness: on the left side A o X = B o Y, on the
// right side X o A = Y o B.  The struct itself is inert data; pass it to
// verify_reversibility for the exact re-check.
struct ReversibilityWitness {
  ReversibilitySide side = ReversibilitySide::left;
  RationalFunction x;
  RationalFunction y;
};

// One solution triple of A o X = A o Y with X != Y, as produced by
// even_construction; feeding it to build_from_fiber_pair yields a solution
// of the pair system F o F = F o G, G o G = G o F.
struct FiberTriple {
  RationalFunction a;
  RationalFunction x;
  RationalFunction y;
};

// A pair of distinct composition words over the alphabet {A, B} with equal
// value.  Words read right to left: the rightmost letter is applied first,
// so "AB" denotes A o B.
struct WordRelation {
  std::string word1;
  std::string word2;
  RationalFunction value;
};

// Exact check of X^(2k) = X^k o P^l and P^(2l) = P^l o X^k for the given
// exponents.  Both degrees must be at least 2.
bool check_sisis(const RationalFunction& x, const RationalFunction& p, long k,
                 long l);

// Scans exponent pairs (k, l) with (deg X)^k = (deg P)^l -- the degree
// relation any solution must satisfy -- in order of increasing k + l, up to
// bound on each exponent, and returns the first pair passing check_sisis.
std::optional<SisisWitness> search_sisis(const RationalFunction& x,
                                         const RationalFunction& p, long bound);

// Exact check of the pair system F o F = F o G and G o G = G o F.
bool check_eq_system(const RationalFunction& f, const RationalFunction& g);

// Given A o X = A o Y (checked exactly; throws otherwise), returns the pair
// F = X o A, G = Y o A, which always satisfies check_eq_system.
std::pair<RationalFunction, RationalFunction> build_from_fiber_pair(
    const RationalFunction& a, const RationalFunction& x,
    const RationalFunction& y);

// For F = U o z^2 with polynomial U, walks the splittings F = A o X and
// emits (A, X, X(-z)) for every right factor that is not even; F is even,
// so each triple satisfies A o X = A o Y exactly.  A positive factor_degree
// restricts to right factors of exactly that degree; factor_degree 0 keeps
// them all.
std::vector<FiberTriple> even_construction(const RationalFunction& u,
                                           long factor_degree);

// Least exponents (ordered by k + l, then k) with A^k = B^l exactly, under
// the necessary degree relation (deg A)^k = (deg B)^l, scanned up to bound
// on each exponent.
std::optional<std::pair<long, long>> common_iterate(const RationalFunction& a,
                                                    const RationalFunction& b,
                                                    long bound);

// Exact re-check of a reversibility witness on its stated side.
bool verify_reversibility(const RationalFunction& a, const RationalFunction& b,
                          const ReversibilityWitness& w);

// Scans (k, l) under the degree relation and returns the first pair whose
// two iterate equalities A^(2k) = A^k o B^l and B^(2l) = B^l o A^k both
// hold exactly.
std::optional<std::pair<long, long>> right_reversibility_equalities(
    const RationalFunction& a, const RationalFunction& b, long bound);

// Breadth-first search over composition words in {A, B} up to word_length,
// returning the first pair of distinct words with equal value, or absent
// when all values stay distinct.  The returned words never share a
// first-applied letter: such a pair would cancel (rational maps are
// surjective on the sphere) to a shorter collision found earlier.
std::optional<WordRelation> free_pair_certificate(const RationalFunction& a,
                                                  const RationalFunction& b,
                                                  long word_length);

}  // namespace ratsemi
