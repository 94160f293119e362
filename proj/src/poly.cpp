#include "ratsemi/poly.hpp"

#include <sstream>

#include "ratsemi/errors.hpp"

namespace ratsemi {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Coeff& c, size_t k) {
  std::vector<Coeff> v(k + 1, Coeff(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

const Coeff& Polynomial::leading() const {
  if (c_.empty()) throw invalid_input_error("zero polynomial has no leading coefficient");
  return c_.back();
}

void Polynomial::set_coeff(size_t i, const Coeff& v) {
  if (c_.size() < i + 1) c_.resize(i + 1, Coeff(0));
  c_[i] = v;
  trim();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  std::vector<Coeff> r(c_.size() + o.c_.size() - 1, Coeff(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Coeff& s) const {
  Polynomial r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw invalid_input_error("polynomial division by zero");
  Polynomial r = *this, q;
  const Coeff inv_lead = d.leading().inverse();
  const int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    const Coeff c = r.leading() * inv_lead;
    const size_t shift = static_cast<size_t>(r.degree() - dd);
    q += Polynomial::monomial(c, shift);
    r -= Polynomial::monomial(c, shift) * d;
  }
  return {q, r};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw error("polynomial division expected exact but was not");
  return q;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Coeff> r(c_.size() - 1, Coeff(0));
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Coeff(static_cast<long>(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = Polynomial::one(), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * g;
    acc += Polynomial(c_[i]);
  }
  return acc;
}

Coeff Polynomial::eval(const Coeff& x) const {
  Coeff acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Coeff& c = c_[i];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      mpq_class q = c.rat();
      negative = q < 0;
      if (negative) q = -q;
      const bool unit = (q == 1);
      if (i == 0) {
        body = rat_str(q);
      } else if (unit) {
        body = "";
      } else {
        body = rat_str(q) + "*";
      }
    } else {
      body = c.str() + (i == 0 ? "" : "*");
    }
    if (first) {
      os << (negative ? "-" : "");
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << body;
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() <= 0) return f.monic();
  Polynomial g = poly_gcd(f, f.derivative());
  return f.exact_div(g).monic();
}

Coeff resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Coeff(0);
  Polynomial f = a, g = b;
  Coeff acc(1);
  bool swap_sign = false;
  if (f.degree() < g.degree()) {
    if ((f.degree() * g.degree()) % 2 == 1) swap_sign = !swap_sign;
    std::swap(f, g);
  }
  while (g.degree() > 0) {
    Polynomial r = f.divmod(g).second;
    if (r.is_zero()) return Coeff(0);
    // res(f, g) = (-1)^(df*dg) * lc(g)^(df - dr) * res(g, r)
    if ((f.degree() * g.degree()) % 2 == 1) swap_sign = !swap_sign;
    acc *= g.leading().pow(f.degree() - r.degree());
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant: res(f, c) = c^deg(f).
  acc *= g.leading().pow(f.degree());
  return swap_sign ? -acc : acc;
}

Polynomial interpolate(const std::vector<std::pair<Coeff, Coeff>>& points) {
  // Newton divided differences.
  const size_t n = points.size();
  if (n == 0) return Polynomial();
  std::vector<Coeff> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n; i-- > level;) {
      const Coeff dx = points[i].first - points[i - level].first;
      if (dx.is_zero()) throw invalid_input_error("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  Polynomial acc;
  for (size_t i = n; i-- > 0;) {
    acc = acc * (Polynomial::x() - Polynomial(points[i].first));
    acc += Polynomial(dd[i]);
  }
  return acc;
}

}  // namespace ratsemi
