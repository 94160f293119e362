#include "ratsemi/rational_fn.hpp"

#include <sstream>

#include "ratsemi/errors.hpp"

namespace ratsemi {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw invalid_input_error("rational function with zero denominator");
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const Coeff inv = den_.leading().inverse();
  num_ = num_ * inv;
  den_ = den_ * inv;
}

int RationalFunction::degree() const {
  return std::max(std::max(num_.degree(), den_.degree()), 0);
}

bool RationalFunction::is_identity() const {
  return den_.degree() == 0 && num_ == Polynomial::x();
}

std::optional<Coeff> RationalFunction::eval(const Coeff& x) const {
  const Coeff d = den_.eval(x);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction compose(const RationalFunction& f, const RationalFunction& g,
                         long degree_cap) {
  const long df = f.degree(), dg = g.degree();
  if (df > 0 && dg > 0) {
    mpz_class predicted = mpz_class(df) * mpz_class(dg);
    if (predicted > degree_cap)
      throw degree_cap_error("composition degree " + predicted.get_str() +
                             " exceeds cap " + std::to_string(degree_cap));
  }
  // Homogenize f's coefficients against (num_g, den_g).
  const int n = std::max(f.num().degree(), f.den().degree());
  std::vector<Polynomial> un(static_cast<size_t>(n) + 1), vn(static_cast<size_t>(n) + 1);
  un[0] = Polynomial::one();
  vn[0] = Polynomial::one();
  for (int i = 1; i <= n; ++i) {
    un[i] = un[i - 1] * g.num();
    vn[i] = vn[i - 1] * g.den();
  }
  Polynomial new_num, new_den;
  for (int i = 0; i <= n; ++i) {
    const Polynomial basis = un[i] * vn[n - i];
    new_num += basis * f.num().coeff(i);
    new_den += basis * f.den().coeff(i);
  }
  if (new_den.is_zero())
    throw invalid_input_error(
        "composition degenerates to the constant infinity (inner value is a pole)");
  RationalFunction result(std::move(new_num), std::move(new_den));
  if (df > 0 && dg > 0 && mpz_class(result.degree()) != mpz_class(df) * mpz_class(dg))
    throw error("composition degree mismatch (internal invariant)");
  return result;
}

RationalFunction iterate(const RationalFunction& f, unsigned k, long degree_cap) {
  if (k == 0) throw invalid_input_error("iterate requires k >= 1");
  const long d = f.degree();
  if (d > 1) {
    mpz_class predicted = 1;
    for (unsigned i = 0; i < k; ++i) {
      predicted *= d;
      if (predicted > degree_cap)
        throw degree_cap_error("iterate degree " + predicted.get_str() +
                               " exceeds cap " + std::to_string(degree_cap));
    }
  }
  RationalFunction acc = f;
  for (unsigned i = 1; i < k; ++i) acc = compose(acc, f, degree_cap);
  return acc;
}

Mobius::Mobius(Coeff a, Coeff b, Coeff c, Coeff d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    throw invalid_input_error("Mobius transformation must have nonzero determinant");
  // Normalize: first nonzero of (a, b, c, d) becomes 1.
  Coeff pivot(0);
  for (const Coeff* p : {&a_, &b_, &c_, &d_}) {
    if (!p->is_zero()) {
      pivot = *p;
      break;
    }
  }
  const Coeff inv = pivot.inverse();
  a_ *= inv;
  b_ *= inv;
  c_ *= inv;
  d_ *= inv;
}

Mobius Mobius::from_rational(const RationalFunction& f) {
  if (f.degree() != 1)
    throw invalid_input_error("Mobius conversion requires a degree-1 function");
  return Mobius(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
}

bool Mobius::is_identity() const {
  return b_.is_zero() && c_.is_zero() && a_ == d_ && !a_.is_zero();
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

Mobius Mobius::compose(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

RationalFunction Mobius::to_rational() const {
  return RationalFunction(Polynomial{b_, a_}, Polynomial{d_, c_});
}

std::optional<Coeff> Mobius::apply(const Coeff& x) const {
  const Coeff d = c_ * x + d_;
  if (d.is_zero()) return std::nullopt;
  return (a_ * x + b_) / d;
}

bool Mobius::operator==(const Mobius& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

std::string Mobius::str() const { return to_rational().str(); }

RationalFunction conjugate(const RationalFunction& f, const Mobius& mu, long degree_cap) {
  return compose(mu.to_rational(), compose(f, mu.inverse().to_rational(), degree_cap),
                 degree_cap);
}

}  // namespace ratsemi
