#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace ratsemi {

// Exact element of Q or of a cyclotomic field Q(zeta_m), stored as a residue
// polynomial in the power basis 1, zeta, ..., zeta^(phi(m)-1) modulo the
// m-th cyclotomic polynomial.  m == 1 means plain rational.  Values whose
// residue is constant are demoted to m == 1 on normalization, so equality is
// well defined across embeddings.
class Coeff {
 public:
  Coeff() : m_(1), c_{mpq_class(0)} {}
  Coeff(long v) : m_(1), c_{mpq_class(v)} {}  // NOLINT: implicit by design
  explicit Coeff(const mpq_class& v) : m_(1), c_{v} {}
  // Residue coordinates modulo Phi_m; size must be phi(m) (checked).
  Coeff(unsigned m, std::vector<mpq_class> coords);

  // Primitive m-th root of unity zeta_m.
  static Coeff zeta(unsigned m);
  // Parse "p/q" / "p" rational literals.
  static Coeff from_string(const std::string& s);

  unsigned conductor() const { return m_; }
  const std::vector<mpq_class>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return m_ == 1; }
  // Value as a rational; requires is_rational().
  const mpq_class& rat() const;

  Coeff operator-() const;
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;  // throws invalid_input_error on /0
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  Coeff inverse() const;
  Coeff pow(long e) const;  // negative exponents via inverse

  // Numeric value with zeta_m -> exp(2*pi*i/m).
  std::complex<double> to_complex() const;

  // Canonical text form: "p/q" or "p" for rationals, "zeta[m](c0,c1,...)"
  // otherwise.  Stable, suitable as a map key.
  std::string str() const;

 private:
  void normalize();

  unsigned m_;
  std::vector<mpq_class> c_;
};

// The m-th cyclotomic polynomial Phi_m as dense rational coefficients
// (ascending, exact); cached.
const std::vector<mpq_class>& cyclotomic_poly(unsigned m);

// Exact k-th root of a rational if one exists in Q (k >= 1).  For even k
// only the nonnegative root is reported.
std::optional<mpq_class> rational_kth_root(const mpq_class& q, unsigned k);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_str(const mpq_class& q);
mpq_class rat_from_string(const std::string& s);

}  // namespace ratsemi
