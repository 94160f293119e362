#pragma once

#include <vector>

#include "ratsemi/poly.hpp"

namespace ratsemi {

// Truncated Laurent expansion at infinity: coefficients for the exponent
// window [lo, hi], with everything above hi exactly zero and everything below
// lo unknown.  Arithmetic tracks the window conservatively, so a coefficient
// read inside the window is exact.
class LaurentJet {
 public:
  // Zero jet on the window [lo, 0].
  explicit LaurentJet(long lo = 0);
  // The polynomial viewed as a jet; exact down to lo (zeros below degree 0).
  static LaurentJet from_polynomial(const Polynomial& p, long lo);
  // The identity z, known down to lo.
  static LaurentJet variable(long lo);

  long hi() const { return hi_; }
  long lo() const { return lo_; }
  // Coefficient of z^e; exact zero above the window, throws below it.
  const Coeff& coeff(long e) const;

  LaurentJet operator+(const LaurentJet& o) const;
  LaurentJet operator-(const LaurentJet& o) const;
  LaurentJet operator*(const LaurentJet& o) const;
  LaurentJet scale(const Coeff& c) const;
  // Multiplication by z^k.
  LaurentJet shift(long k) const;
  LaurentJet pow(unsigned k) const;
  // Reciprocal; requires a nonzero leading coefficient.
  LaurentJet inverse() const;

  // True when every known coefficient in [from, hi] vanishes.
  bool is_zero_down_to(long from) const;

 private:
  LaurentJet(long hi, long lo, std::vector<Coeff> a);
  long hi_, lo_;
  std::vector<Coeff> a_;  // a_[i] is the coefficient of z^(hi - i)
};

// Evaluates w * (1 + sum_j tail[j-1] * w^(-j)), the shape shared by the
// conjugating coordinate and its inverse.  tail holds c_1..c_k.
LaurentJet apply_tail(const std::vector<Coeff>& tail, const LaurentJet& w);

// Coordinate change at infinity conjugating a centered polynomial of degree
// n >= 2 to the scaled power map lc(P) * z^n: returns c_1..c_order of
// phi(z) = z * (1 + c_1/z + ...) with phi(P(z)) = lc(P) * phi(z)^n.
// The expansion is solved term by term and re-verified through the window.
std::vector<Coeff> conjugating_tail(const Polynomial& P, long order);

// Tail e_1..e_order of the compositional inverse psi with psi(phi(z)) = z,
// given phi's tail.
std::vector<Coeff> inverse_tail(const std::vector<Coeff>& phi_tail, long order);

// Exposed record of the conjugating coordinate for a monic centered
// polynomial (phi o P = phi^n).
struct BottcherSeries {
  Polynomial base;
  std::vector<Coeff> coeffs;  // c_1..c_order
  long truncation_order;
};

// Requires P monic and centered (zero z^(n-1) coefficient) of degree >= 2.
BottcherSeries bottcher_expand(const Polynomial& P, long order);

}  // namespace ratsemi
