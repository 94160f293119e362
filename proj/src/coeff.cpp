#include "ratsemi/coeff.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "ratsemi/errors.hpp"

namespace ratsemi {
namespace {

using QVec = std::vector<mpq_class>;

void trim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Remainder of a modulo monic b.
QVec rem_monic(QVec a, const QVec& b) {
  trim(a);
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    const mpq_class lead = a.back();
    const size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (size_t j = 0; j < db; ++j) a[shift + j] -= lead * b[j];
    }
    a.pop_back();
    trim(a);
    if (a.size() <= db) break;
  }
  return a;
}

// Exact quotient a / b for monic b dividing a.
QVec div_monic_exact(QVec a, const QVec& b) {
  trim(a);
  const size_t db = b.size() - 1;
  if (a.empty()) return {};
  QVec q(a.size() - db, mpq_class(0));
  while (a.size() > db) {
    const mpq_class lead = a.back();
    const size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (size_t j = 0; j + 1 <= db; ++j) a[shift + j] -= lead * b[j];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw error("cyclotomic division not exact");
  return q;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Extended Euclid over Q[x]: returns (g, u) with u*f + v*phi = g, g monic gcd.
std::pair<QVec, QVec> half_ext_gcd(QVec f, QVec phi) {
  QVec r0 = std::move(phi), r1 = std::move(f);
  QVec u0 = {}, u1 = {mpq_class(1)};  // coefficients of f
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r, with division over Q (r1 not necessarily monic).
    QVec r = r0, q;
    const mpq_class inv_lead = 1 / r1.back();
    while (r.size() >= r1.size() && !r.empty()) {
      const mpq_class c = r.back() * inv_lead;
      const size_t shift = r.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) r[shift + j] -= c * r1[j];
      trim(r);
      if (r.size() < r1.size()) break;
    }
    QVec u = u0;
    {
      QVec qu = mul(q, u1);
      if (u.size() < qu.size()) u.resize(qu.size(), mpq_class(0));
      for (size_t i = 0; i < qu.size(); ++i) u[i] -= qu[i];
      trim(u);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  // Normalize gcd monic.
  if (!r0.empty()) {
    const mpq_class inv = 1 / r0.back();
    for (auto& c : r0) c *= inv;
    for (auto& c : u0) c *= inv;
  }
  return {r0, u0};
}

}  // namespace

const std::vector<mpq_class>& cyclotomic_poly(unsigned m) {
  static std::map<unsigned, QVec> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  QVec result;
  if (m == 1) {
    result = {mpq_class(-1), mpq_class(1)};  // x - 1
  } else {
    QVec num(m + 1, mpq_class(0));  // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d == 0) num = div_monic_exact(num, cyclotomic_poly(d));
    }
    result = std::move(num);
  }
  return cache.emplace(m, std::move(result)).first->second;
}

Coeff::Coeff(unsigned m, std::vector<mpq_class> coords) : m_(m), c_(std::move(coords)) {
  if (m_ == 0) throw invalid_input_error("cyclotomic conductor must be positive");
  const size_t want = (m_ == 1) ? 1 : euler_phi(m_);
  if (c_.size() != want)
    throw invalid_input_error("cyclotomic coordinate count does not match phi(m)");
  normalize();
}

void Coeff::normalize() {
  if (m_ == 1) return;
  // phi(m) == 1 (m == 2): the residue is a constant; zeta_2 never appears.
  bool constant = true;
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) {
      constant = false;
      break;
    }
  }
  if (constant) {
    mpq_class v = c_.empty() ? mpq_class(0) : c_[0];
    m_ = 1;
    c_ = {v};
  }
}

Coeff Coeff::zeta(unsigned m) {
  if (m == 0) throw invalid_input_error("zeta conductor must be positive");
  if (m == 1) return Coeff(1);
  if (m == 2) return Coeff(-1);
  std::vector<mpq_class> c(euler_phi(m), mpq_class(0));
  c[1] = 1;
  return Coeff(m, std::move(c));
}

Coeff Coeff::from_string(const std::string& s) { return Coeff(rat_from_string(s)); }

bool Coeff::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

const mpq_class& Coeff::rat() const {
  if (m_ != 1) throw invalid_input_error("coefficient is not rational: " + str());
  return c_[0];
}

namespace {

// Embed residue coords from Q(zeta_m) into Q(zeta_M), m | M.
std::vector<mpq_class> embed(const std::vector<mpq_class>& c, unsigned m, unsigned M) {
  if (m == M) return c;
  const unsigned step = M / m;
  QVec raw;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const size_t e = i * step;
    if (raw.size() < e + 1) raw.resize(e + 1, mpq_class(0));
    raw[e] += c[i];
  }
  raw = rem_monic(std::move(raw), cyclotomic_poly(M));
  raw.resize(euler_phi(M), mpq_class(0));
  return raw;
}

}  // namespace

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Coeff Coeff::operator+(const Coeff& o) const {
  const unsigned M = std::lcm(m_, o.m_);
  QVec a = embed(c_, m_, M), b = embed(o.c_, o.m_, M);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  if (M == 1) return Coeff(a[0]);
  return Coeff(M, std::move(a));
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  const unsigned M = std::lcm(m_, o.m_);
  if (M == 1) return Coeff(c_[0] * o.c_[0]);
  QVec a = embed(c_, m_, M), b = embed(o.c_, o.m_, M);
  QVec p = rem_monic(mul(a, b), cyclotomic_poly(M));
  p.resize(euler_phi(M), mpq_class(0));
  return Coeff(M, std::move(p));
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw invalid_input_error("division by zero coefficient");
  if (m_ == 1) return Coeff(mpq_class(1 / c_[0]));
  auto [g, u] = half_ext_gcd(c_, cyclotomic_poly(m_));
  // Phi_m is irreducible over Q, so the gcd of a nonzero residue is 1.
  if (g.size() != 1) throw error("cyclotomic inverse failed (reducible modulus?)");
  u = rem_monic(std::move(u), cyclotomic_poly(m_));
  u.resize(euler_phi(m_), mpq_class(0));
  return Coeff(m_, std::move(u));
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

bool Coeff::operator==(const Coeff& o) const {
  const unsigned M = std::lcm(m_, o.m_);
  return embed(c_, m_, M) == embed(o.c_, o.m_, M);
}

Coeff Coeff::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Coeff base = *this, acc = Coeff(1);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::complex<double> Coeff::to_complex() const {
  std::complex<double> sum = 0;
  const double two_pi = 8.0 * std::atan(1.0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double angle = two_pi * static_cast<double>(i) / static_cast<double>(m_);
    sum += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Coeff::str() const {
  if (m_ == 1) return rat_str(c_[0]);
  std::ostringstream os;
  os << "zeta[" << m_ << "](";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rat_str(c_[i]);
  }
  os << ")";
  return os.str();
}

std::optional<mpq_class> rational_kth_root(const mpq_class& q, unsigned k) {
  if (k == 0) throw invalid_input_error("root order must be positive");
  if (k == 1) return q;
  if (q == 0) return mpq_class(0);
  mpq_class v = q;
  bool negate = false;
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    negate = true;
    v = -v;
  }
  mpz_class num_root, den_root;
  if (!mpz_root(num_root.get_mpz_t(), v.get_num_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(den_root.get_mpz_t(), v.get_den_mpz_t(), k)) return std::nullopt;
  mpq_class r(num_root, den_root);
  r.canonicalize();
  return negate ? mpq_class(-r) : r;
}

std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rat_from_string(const std::string& s) {
  if (s.empty()) throw invalid_input_error("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' ||
          ch == '/'))
      throw invalid_input_error("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw invalid_input_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw invalid_input_error("zero denominator in literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace ratsemi
