#pragma once

#include <optional>

#include "ratsemi/rational_fn.hpp"

namespace ratsemi {

// Chebyshev polynomial T_n normalized by T_n(cos t) = cos(n t); n >= 1.
Polynomial chebyshev(unsigned n);

// z^n for n != 0 (negative exponents give 1/z^|n|).
RationalFunction power_map(long n);

enum class SpecialKind {
  power_conjugate,
  chebyshev_conjugate,
  negative_chebyshev_conjugate,
  not_special_polynomial,
  undecided_rational,
};

const char* to_string(SpecialKind k);

// Classification of a function against the conjugacy classes of z^n and
// +-T_n.  The kind is exact for polynomial input.  A witness is attached
// only when a rational conjugator exists; it satisfies
// conjugate(input, witness) == normal form (z^n, T_n, or -T_n).
struct SpecialnessReport {
  SpecialKind kind;
  std::optional<Mobius> witness;
};

// Decides the conjugacy class of a polynomial of degree >= 2.
SpecialnessReport is_special_polynomial(const Polynomial& P);

// Rational entry point: polynomials are classified exactly; genuine rational
// functions are reported as undecided (no Lattes-style detection here).
SpecialnessReport is_special(const RationalFunction& f);

}  // namespace ratsemi
