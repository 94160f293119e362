#pragma once

#include <random>

#include "ratsemi/rational_fn.hpp"

namespace ratsemi::testutil {

// Deterministic random polynomial with integer coefficients in
// [-span, span], exact degree deg (nonzero leading coefficient).
inline Polynomial random_poly(std::mt19937& rng, int deg, int span = 3) {
  std::uniform_int_distribution<int> any(-span, span);
  std::uniform_int_distribution<int> nonzero(1, 2 * span);
  std::vector<Coeff> c(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = Coeff(any(rng));
  int lead = nonzero(rng) - span;
  if (lead <= 0) --lead;  // skew away from zero
  c[static_cast<size_t>(deg)] = Coeff(lead);
  return Polynomial(std::move(c));
}

// Monic variant.
inline Polynomial random_monic_poly(std::mt19937& rng, int deg, int span = 3) {
  Polynomial p = random_poly(rng, deg, span);
  std::vector<Coeff> c = p.coeffs();
  c.back() = Coeff(1);
  return Polynomial(std::move(c));
}

inline Mobius random_affine(std::mt19937& rng, int span = 3) {
  std::uniform_int_distribution<int> any(-span, span);
  int a = 0;
  while (a == 0) a = any(rng);
  return Mobius::affine(Coeff(a), Coeff(any(rng)));
}

}  // namespace ratsemi::testutil
