#include "ratsemi/special.hpp"

#include "ratsemi/errors.hpp"

namespace ratsemi {

Polynomial chebyshev(unsigned n) {
  if (n == 0) throw invalid_input_error("chebyshev: index must be >= 1");
  Polynomial prev = Polynomial::one();
  Polynomial cur = Polynomial::x();
  for (unsigned k = 1; k < n; ++k) {
    Polynomial next = cur * Polynomial{Coeff(0), Coeff(2)} - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalFunction power_map(long n) {
  if (n == 0) throw invalid_input_error("power_map: exponent must be nonzero");
  Polynomial zn = Polynomial::monomial(Coeff(1), static_cast<size_t>(n < 0 ? -n : n));
  if (n > 0) return RationalFunction(zn);
  return RationalFunction(Polynomial::one(), zn);
}

const char* to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::power_conjugate: return "power-conjugate";
    case SpecialKind::chebyshev_conjugate: return "chebyshev-conjugate";
    case SpecialKind::negative_chebyshev_conjugate: return "negative-chebyshev-conjugate";
    case SpecialKind::not_special_polynomial: return "not-special-polynomial";
    case SpecialKind::undecided_rational: return "undecided-rational";
  }
  return "?";
}

namespace {

// a * P((z - b)/a) + b, i.e. the conjugate of P by mu(z) = a*z + b.
Polynomial affine_conjugate(const Polynomial& P, const Coeff& a, const Coeff& b) {
  Coeff ai = a.inverse();
  Polynomial inner{-b * ai, ai};
  return P.compose(inner) * a + Polynomial(b);
}

// Verifies the witness before handing it out; a failure here would mean an
// internal inconsistency, not bad input.
Mobius checked_witness(const Polynomial& P, const Coeff& a, const Coeff& shift,
                       const Polynomial& target) {
  // Full conjugator: scaling after the centering translation z + shift.
  Coeff b = a * shift;
  if (affine_conjugate(P, a, b) != target)
    throw error("specialness witness failed exact verification");
  return Mobius::affine(a, b);
}

}  // namespace

SpecialnessReport is_special_polynomial(const Polynomial& P) {
  long n = P.degree();
  if (n < 2) throw invalid_input_error("specialness test needs degree >= 2");

  // Center: kill the z^(n-1) coefficient with a translation.  Any affine
  // conjugation onto z^n or +-T_n (all centered) must factor through it.
  Coeff lead = P.coeff(static_cast<size_t>(n));
  Coeff shift = P.coeff(static_cast<size_t>(n - 1)) / (Coeff(n) * lead);
  Polynomial C = affine_conjugate(P, Coeff(1), shift);

  bool monomial = true;
  for (long i = 0; i < n; ++i)
    if (!C.coeff(static_cast<size_t>(i)).is_zero()) { monomial = false; break; }

  if (monomial) {
    // Remaining freedom is a scaling a*z with a^(n-1) = lead.
    SpecialnessReport rep{SpecialKind::power_conjugate, std::nullopt};
    if (lead.is_rational()) {
      if (auto a = rational_kth_root(lead.rat(), n - 1))
        rep.witness = checked_witness(P, Coeff(*a), shift,
                                      Polynomial::monomial(Coeff(1), static_cast<size_t>(n)));
    }
    return rep;
  }

  Polynomial T = chebyshev(static_cast<unsigned>(n));
  Coeff t_top = T.coeff(static_cast<size_t>(n));
  Coeff t_sub = T.coeff(static_cast<size_t>(n - 2));
  Coeff c_sub = C.coeff(static_cast<size_t>(n - 2));
  if (!c_sub.is_zero()) {
    // The scaling satisfies a^2 = (lead * t_{n-2}) / (c_{n-2} * t_n); the
    // full coefficient match is then verified exactly for both signs of T_n.
    Coeff alpha = (lead * t_sub) / (c_sub * t_top);
    for (int sgn : {1, -1}) {
      Coeff sigma(sgn);
      bool ok = true;
      std::optional<Coeff> a_exact;  // known exactly when n is even
      if (n % 2 == 1) {
        // Only even powers of the scaling appear; work with alpha directly.
        for (long i = n; i >= 0 && ok; --i) {
          Coeff ci = C.coeff(static_cast<size_t>(i));
          Coeff ti = T.coeff(static_cast<size_t>(i));
          if ((n - i) % 2 == 1) {
            ok = ci.is_zero();  // T_n has pure parity
          } else {
            ok = ci * alpha.pow((1 - i) / 2) == sigma * ti;
          }
        }
      } else {
        // n even: a itself is forced, a = (lead / (sigma t_n)) * alpha^(-(n-2)/2).
        Coeff a = (lead / (sigma * t_top)) * alpha.pow(-(n - 2) / 2);
        if (!(a * a == alpha)) {
          ok = false;
        } else {
          for (long i = n; i >= 0 && ok; --i) {
            Coeff ci = C.coeff(static_cast<size_t>(i));
            Coeff ti = T.coeff(static_cast<size_t>(i));
            ok = ci * a.pow(1 - i) == sigma * ti;
          }
          if (ok) a_exact = a;
        }
      }
      if (!ok) continue;
      SpecialnessReport rep{sgn > 0 ? SpecialKind::chebyshev_conjugate
                                    : SpecialKind::negative_chebyshev_conjugate,
                            std::nullopt};
      Polynomial target = sgn > 0 ? T : -T;
      if (n % 2 == 1) {
        if (alpha.is_rational()) {
          if (auto a = rational_kth_root(alpha.rat(), 2))
            rep.witness = checked_witness(P, Coeff(*a), shift, target);
        }
      } else if (a_exact && a_exact->is_rational()) {
        rep.witness = checked_witness(P, *a_exact, shift, target);
      }
      return rep;
    }
  }

  return SpecialnessReport{SpecialKind::not_special_polynomial, std::nullopt};
}

SpecialnessReport is_special(const RationalFunction& f) {
  if (f.degree() < 2) throw invalid_input_error("specialness test needs degree >= 2");
  if (f.is_polynomial()) return is_special_polynomial(f.num());
  return SpecialnessReport{SpecialKind::undecided_rational, std::nullopt};
}

}  // namespace ratsemi
