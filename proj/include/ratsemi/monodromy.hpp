#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "ratsemi/poly.hpp"
#include "ratsemi/rational_fn.hpp"

namespace ratsemi {

// Working precision for the numeric monodromy pipeline.  Every run is
// certified against exact combinatorial identities (permutation product
// relation, Riemann-Hurwitz counts, genus integrality); `automatic` retries
// a failed double run once at double-double before giving up with
// precision_error.
enum class Precision {
  automatic,
  double_only,
  double_double,
};

// Finite critical values of a map, as exact algebra plus numeric roots.
// `locus` is monic and squarefree with the finite critical values as its
// roots; `values` are its numeric roots; `infinity_branch` reports whether
// the point at infinity is itself a critical value (always true for a
// polynomial of degree >= 2).
struct CriticalValues {
  Polynomial locus;
  std::vector<std::complex<double>> values;
  bool infinity_branch = false;
};

CriticalValues critical_values(const RationalFunction& a);

// Sheet permutation in one-line notation: analytic continuation around the
// loop carries sheet i to sheet perm[i].
using Permutation = std::vector<std::size_t>;

// Monodromy permutations of A around each point of `branch_set`, computed by
// tracking the fiber over `base` along spoke-and-circle loops.  The returned
// list is aligned with `branch_set`.
//
// Preconditions: deg A >= 2; `branch_set` is nonempty, contains every finite
// branch point of A (extra regular points are allowed and yield identity
// permutations), and does not contain `base`; the fiber over `base` is
// simple.  The run is certified: the ordered loop product must invert to the
// exact cycle type of the fiber over infinity, and the Riemann-Hurwitz count
// must come out exactly; otherwise the run escalates and finally throws
// precision_error.
std::vector<Permutation> monodromy(
    const RationalFunction& a,
    const std::vector<std::complex<double>>& branch_set,
    std::complex<double> base, Precision precision = Precision::automatic);

// A certified joint monodromy run for a pair of maps over their merged
// branch set.  branch_points lists the finite branch values; when
// infinity_marker is set, infinity is also a branch value and the extra
// final entry of perms_a/perms_b (one past the finite ones) belongs to it.
// base_point is the common regular base value, and precision the target
// accuracy of the run that produced the permutations.
//
// `traversal` publishes the loop order of the certified run: it is a
// permutation of the branch indices (0..branch_points.size()-1 plus the
// infinity entry when marked), and composing the permutations of either map
// in that order -- perms[traversal[0]] o ... o perms[traversal.back()],
// rightmost applied first -- gives the identity exactly.  This is the product
// relation for a generator system of the punctured sphere's fundamental
// group, and certification never publishes a system that fails it.
struct MonodromySystem {
  std::vector<std::complex<double>> branch_points;
  bool infinity_marker = false;
  std::vector<Permutation> perms_a;
  std::vector<Permutation> perms_b;
  std::vector<std::size_t> traversal;
  std::complex<double> base_point;
  double precision = 0.0;
};

// One irreducible component of the curve A(x) = B(y): an orbit of sheet
// pairs under the joint monodromy action, with its covering degree over the
// base sphere and its geometric genus from the Riemann-Hurwitz count.
struct CurveComponent {
  std::vector<std::pair<std::size_t, std::size_t>> orbit;
  long degree = 0;
  long genus = 0;
};

struct FiberDecomposition {
  MonodromySystem system;
  std::vector<CurveComponent> components;
};

// Irreducible components of the fiber-product curve A(x) = B(y), with
// per-component degree and genus.  Requires deg >= 2 on both sides.
FiberDecomposition fiber_decomposition(const RationalFunction& a,
                                       const RationalFunction& b,
                                       Precision precision = Precision::automatic);
std::vector<CurveComponent> fiber_components(const RationalFunction& a,
                                             const RationalFunction& b);

// Components of A(x) = A(y) with the diagonal component removed.  `wild` is
// set when some remaining component has genus <= 1 (so the pair semigroup
// machinery sees an unbounded supply of solutions); `diagonal_clean` reports
// that the removed orbit was exactly the diagonal sheet pairing, which the
// certification is expected to guarantee.
struct TameReport {
  bool wild = false;
  bool diagonal_clean = true;
  std::vector<CurveComponent> components;
};

TameReport tame_check(const RationalFunction& a,
                      Precision precision = Precision::automatic);

// Minimum component genus of A^(n)(x) = B^(m)(y) over a grid of iterate
// pairs.  Cells whose fiber size (deg A)^n * (deg B)^m exceeds fiber_cap are
// reported as skipped rather than computed.
struct GenusScanCell {
  long n = 0;
  long m = 0;
  bool skipped = false;
  long min_genus = 0;
};

std::vector<GenusScanCell> genus_scan(const RationalFunction& a,
                                      const RationalFunction& b, long n_max,
                                      long m_max, long fiber_cap);

}  // namespace ratsemi
