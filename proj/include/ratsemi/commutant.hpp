#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratsemi/rational_fn.hpp"

namespace ratsemi {

// One congruence class of the commutant C(P) under Q1 ~ Q2 iff
// Q1 o P^(o l1) = Q2 o P^(o l2) for some l1, l2 >= 0.  Every member found up
// to the enumeration bound equals representative o P^(o l) for some l.
struct CommutantClass {
  RationalFunction representative;        // the minimal-degree member
  long class_degree = 0;                  // its degree
  std::vector<RationalFunction> members;  // all members below the bound
  unsigned field_conductor = 1;           // 1 = rational coefficients;
                                          // m = needs the m-th roots of unity
};

// Bounded enumeration of C(P) for a monic centered non-special polynomial:
// candidates arise from the conjugating coordinate at infinity as
// psi o (eps z^d) o phi for each degree d <= max_degree and each eps with
// eps^(deg P - 1) = 1, are recognized as polynomials from their truncated
// expansion, and survive only exact verification of X o P = P o X.  Classes
// are returned in order of discovery (degree ascending).  Completeness holds
// only up to max_degree; the count of classes is a lower bound for the
// commutant's generator count, not a certificate.
std::vector<CommutantClass> commutant_enumerate(const Polynomial& p,
                                                long max_degree);

// Outcome of a congruence test: `equal` is trustworthy whenever
// bound_reached is false; bound_reached signals that the forced iteration
// exponent exceeded l_max, leaving the (unique) candidate equality untested.
struct ClassVerdict {
  bool equal = false;
  bool bound_reached = false;
};

// Decides Q1 o P^(o l1) = Q2 o P^(o l2) for some l1, l2: the degree relation
// deg Q1 * n^l1 = deg Q2 * n^l2 forces the exponent gap, so a single exact
// composition settles it.  Both inputs must commute with P (verified here).
ClassVerdict class_equal(const RationalFunction& q1, const RationalFunction& q2,
                         const RationalFunction& p, long l_max);

// All affine mu with mu o P = P o mu, complete over the complex numbers: the
// scale is an (n-1)-th root of unity (realized in the cyclotomic field), the
// offset is forced by the subleading coefficient, and every candidate is
// verified exactly.
std::vector<Mobius> aut_group(const Polynomial& p);

// Rational-function front end: polynomials delegate to the complete search;
// other functions require an explicit candidate list, which is filtered by
// exact commutation (enumeration for general rational functions is out of
// scope).
std::vector<Mobius> aut_group(
    const RationalFunction& f,
    const std::optional<std::vector<Mobius>>& candidates = std::nullopt);

// The finite quotient group G_P = C(P)/~ with its Cayley table.  table[i][j]
// is the class index of elements[i].representative o elements[j].representative.
// When a product's class cannot be located within the enumeration bounds the
// table is flagged incomplete (entries left as SIZE_MAX) and no axioms are
// claimed.  On complete tables the group axioms are verified outright and a
// metacyclic decomposition (cyclic normal subgroup with cyclic quotient) is
// searched for by brute force.
struct GroupTable {
  std::vector<CommutantClass> elements;
  std::vector<std::vector<size_t>> table;
  size_t identity_index = SIZE_MAX;
  bool complete = true;
  bool metacyclic = false;
};

GroupTable group_table(const Polynomial& p, long max_degree, long l_max);

// Smallest s <= s_max with X o P^(o s) = P^(o s) o X, else absent.
std::optional<long> cinf_membership(const RationalFunction& x,
                                    const RationalFunction& p, long s_max);

}  // namespace ratsemi
