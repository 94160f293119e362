#pragma once

#include <optional>
#include <vector>

#include "ratsemi/rational_fn.hpp"

namespace ratsemi {

// An exact two-factor splitting: target = left o right, with the composition
// verified at construction (invalid_input_error on mismatch).  The degree
// identity deg(left) * deg(right) = deg(target) then holds automatically.
struct Decomposition {
  RationalFunction left;    // outer factor V
  RationalFunction right;   // inner factor U
  RationalFunction target;  // V o U

  Decomposition(RationalFunction left_, RationalFunction right_,
                RationalFunction target_);
};

// Mobius-equivalence class of splittings of one target: (V, U) and
// (V o mu^-1, mu o U) are the same class for every Mobius mu.  When the right
// factor is a polynomial the representative is normalized so that it is monic
// with constant term zero, which pins down mu completely; non-polynomial
// representatives are kept as supplied.
struct DecompositionClass {
  Decomposition representative;
  bool trivial;  // one of the factors has degree 1
};

// Normalize a verified splitting into its canonical class representative.
DecompositionClass make_class(Decomposition dec);

// The outer factor Y with w = Y o b, if one exists.  Exact linear algebra:
// for polynomial w and b this is the base-b digit expansion (all digits must
// be constants); otherwise the cross-multiplied identity
// num_Y(b) * den_w - num_w * den_Y(b) = 0 is solved as a homogeneous linear
// system and every candidate is re-verified by exact composition.  Returns
// nullopt when no quotient exists, including when deg b does not divide
// deg w; throws invalid_input_error for constant b.
std::optional<RationalFunction> right_factor_quotient(const RationalFunction& w,
                                                      const RationalFunction& b);

// All splitting classes of a polynomial whose right factor has the given
// degree.  In characteristic zero there is at most one: the monic centered
// right factor is forced coefficient by coefficient from the top of w, and
// the outer factor either exists or the class is empty.  Requires
// 1 < right_degree < deg w and right_degree | deg w.
std::vector<DecompositionClass> left_factor_complement(const Polynomial& w,
                                                       long right_degree);

// Every two-factor splitting class of p, sorted by right-factor degree.  For
// polynomials this enumerates all proper divisor degrees and appends the two
// degree-1 ("trivial") classes; for non-polynomial rational functions only
// the trivial classes are produced, and externally found splittings enter
// through the verifying Decomposition constructor.
std::vector<DecompositionClass> all_splittings(const RationalFunction& p);

// The Mobius mu with u2 = mu o u1, if one exists.  For nonconstant reduced
// inputs the solution space of the cross-multiplied linear system is at most
// one-dimensional, so a single verified candidate decides the question.
std::optional<Mobius> mobius_between(const RationalFunction& u1,
                                     const RationalFunction& u2);

// Whether two verified splittings of the same target lie in one Mobius class.
// Equal targets and u_b = mu o u_a already force the outer factors to match
// (right-cancellation), so only the right factors are compared.
bool same_class(const Decomposition& a, const Decomposition& b);

}  // namespace ratsemi
