#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratsemi/decompose.hpp"
#include "ratsemi/version.hpp"

namespace ratsemi {

// The multigraph of conjugacy classes reachable from a polynomial by
// elementary transformations P = V o U  ~>  U o V.  Vertices hold canonical
// class representatives; each edge records the splitting class that realizes
// it, so (from, to, witness) satisfies: witness.target equals the `from`
// representative and the elementary transform of witness lands in the `to`
// class.  Loops arising from the mirrored pair (V,U) / (U,V) are stored once.
struct ClassGraph {
  struct Edge {
    size_t from;
    size_t to;
    DecompositionClass witness;
  };

  std::vector<RationalFunction> vertices;  // pairwise non-conjugate
  std::vector<Edge> edges;
  size_t basepoint = 0;  // index of the input's class
  bool complete = true;  // false when the vertex cap stopped the closure
};

// U o V for a verified splitting target = V o U; same degree as the target.
RationalFunction elementary_transform(const Decomposition& dec);

// Canonical representative of the affine conjugacy class over the rationals:
// centered (zero subleading coefficient), leading coefficient reduced to its
// (deg-1)-power-free part, and the residual z -> -z freedom (odd degree only)
// resolved by making the top nonzero flippable coefficient positive.  Two
// rational polynomials are affinely conjugate over the rationals iff their
// normal forms are equal.  Coefficients outside the rationals are left
// unscaled (centering only).
Polynomial vertex_normal_form(const Polynomial& p);

// Affine mu with conjugate(p, mu) = q, or absent.  Exact: both sides are
// centered, the scale satisfies a^(deg-1) = lead(p~)/lead(q~), and every
// rational candidate is verified by full conjugation.  Witnesses are sought
// over the rationals only; conjugacies that need an irrational or complex
// scale report absent.  Degree mismatch is a negative answer, not an error;
// degrees below 2 are rejected.
std::optional<Mobius> conjugacy_test(const Polynomial& p, const Polynomial& q);

// Breadth-first closure of the input's class under elementary transformations
// of nontrivial splittings.  Rejects special polynomials (their class
// contains infinitely many conjugacy classes).  Stops early when more than
// max_vertices classes appear, flagging the result incomplete.  With
// include_trivial, one loop per vertex accounts for the degree-1 splitting
// pair of every representative.
ClassGraph build_class_graph(const Polynomial& p,
                             size_t max_vertices = kDefaultMaxVertices,
                             bool include_trivial = false);

// First Betti number E - V + C of a completed graph; throws on incomplete.
long betti_rank(const ClassGraph& g);

// DOT rendering: vertices labeled by normal form, edges by factor degrees.
std::string to_dot(const ClassGraph& g);

}  // namespace ratsemi
