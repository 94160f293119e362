#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ratsemi/coeff.hpp"

namespace ratsemi {

// Dense univariate polynomial over Coeff, coefficients ascending, trailing
// zeros trimmed.  The zero polynomial has an empty coefficient vector and
// degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> ascending) : c_(ascending) { trim(); }
  explicit Polynomial(std::vector<Coeff> ascending) : c_(std::move(ascending)) { trim(); }
  explicit Polynomial(const Coeff& constant) : c_{constant} { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial{Coeff(1)}; }
  static Polynomial x() { return Polynomial{Coeff(0), Coeff(1)}; }
  // c * z^k
  static Polynomial monomial(const Coeff& c, size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == Coeff(1); }
  const Coeff& leading() const;
  Coeff coeff(size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  void set_coeff(size_t i, const Coeff& v);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Coeff& s) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

  // Quotient and remainder over the coefficient field; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  // Quotient when the division is known exact; throws otherwise.
  Polynomial exact_div(const Polynomial& d) const;

  Polynomial derivative() const;
  Polynomial pow(unsigned e) const;
  // this(g): substitution, Horner.
  Polynomial compose(const Polynomial& g) const;
  Coeff eval(const Coeff& x) const;

  // Scale so the leading coefficient becomes 1; zero polynomial unchanged.
  Polynomial monic() const;

  // Human form, e.g. "z^3 - 3*z"; deterministic, usable as a map key.
  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Coeff> c_;
};

// Monic gcd over the coefficient field (zero if both zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// f / gcd(f, f'), normalized monic: same roots, all simple.
Polynomial squarefree_part(const Polynomial& f);

// Resultant Res(a, b) over the coefficient field.
Coeff resultant(const Polynomial& a, const Polynomial& b);

// Unique interpolating polynomial through distinct nodes (Newton's form).
Polynomial interpolate(const std::vector<std::pair<Coeff, Coeff>>& points);

}  // namespace ratsemi
