#pragma once

#include <optional>
#include <string>

#include "ratsemi/poly.hpp"
#include "ratsemi/version.hpp"

namespace ratsemi {

class Mobius;

// Rational function num/den in reduced form: gcd(num, den) = 1 and den monic.
// den is never the zero polynomial.  Constants (degree 0) are allowed.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num)
      : RationalFunction(std::move(num), Polynomial::one()) {}

  static RationalFunction identity() { return RationalFunction(Polynomial::x()); }
  static RationalFunction constant(const Coeff& c) {
    return RationalFunction(Polynomial(c));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  // max(deg num, deg den); the degree of the induced covering of the sphere.
  int degree() const;
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return degree() == 0; }
  bool is_identity() const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Exact evaluation; nullopt at a pole.
  std::optional<Coeff> eval(const Coeff& x) const;

  // Deterministic canonical form "(num)/(den)" or "num" for polynomials.
  std::string str(const std::string& var = "z") const;

 private:
  Polynomial num_, den_;
};

// F(G(z)), exact, reduced; throws degree_cap_error if deg F * deg G exceeds
// the cap, and invalid_input_error if the result degenerates to the constant
// infinity (G constant at a pole of F).
RationalFunction compose(const RationalFunction& f, const RationalFunction& g,
                         long degree_cap = kDefaultDegreeCap);

// k-fold self-composition, k >= 1.
RationalFunction iterate(const RationalFunction& f, unsigned k,
                         long degree_cap = kDefaultDegreeCap);

// Mobius transformation (a z + b) / (c z + d), ad - bc != 0, normalized so
// the first nonzero entry of (a, b, c, d) is 1.
class Mobius {
 public:
  Mobius() : a_(1), b_(0), c_(0), d_(1) {}
  Mobius(Coeff a, Coeff b, Coeff c, Coeff d);

  static Mobius identity() { return Mobius(); }
  // az + b (a != 0).
  static Mobius affine(const Coeff& a, const Coeff& b) {
    return Mobius(a, b, Coeff(0), Coeff(1));
  }
  // From a degree-1 rational function.
  static Mobius from_rational(const RationalFunction& f);

  const Coeff& a() const { return a_; }
  const Coeff& b() const { return b_; }
  const Coeff& c() const { return c_; }
  const Coeff& d() const { return d_; }

  bool is_identity() const;
  bool is_affine() const { return c_.is_zero(); }

  Mobius inverse() const;
  // this after o: (this o o)(z) = this(o(z)).
  Mobius compose(const Mobius& o) const;
  RationalFunction to_rational() const;
  std::optional<Coeff> apply(const Coeff& x) const;  // nullopt at the pole

  bool operator==(const Mobius& o) const;
  bool operator!=(const Mobius& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Coeff a_, b_, c_, d_;
};

// mu o F o mu^(-1).
RationalFunction conjugate(const RationalFunction& f, const Mobius& mu,
                           long degree_cap = kDefaultDegreeCap);

}  // namespace ratsemi
