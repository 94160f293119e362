#include "ratsemi/series.hpp"

#include <utility>

#include "ratsemi/errors.hpp"

namespace ratsemi {

LaurentJet::LaurentJet(long hi, long lo, std::vector<Coeff> a)
    : hi_(hi), lo_(lo), a_(std::move(a)) {
  if (lo_ > hi_) throw error("laurent jet: empty exponent window");
  if (a_.size() != static_cast<size_t>(hi_ - lo_ + 1))
    throw error("laurent jet: window/coefficient mismatch");
}

LaurentJet::LaurentJet(long lo)
    : LaurentJet(0, lo > 0 ? 0 : lo,
                 std::vector<Coeff>(static_cast<size_t>((lo > 0 ? 0 : -lo) + 1))) {}

LaurentJet LaurentJet::from_polynomial(const Polynomial& p, long lo) {
  long hi = p.degree() < 0 ? 0 : p.degree();
  if (lo > 0) lo = 0;
  std::vector<Coeff> a(static_cast<size_t>(hi - lo + 1));
  for (long e = hi; e >= lo; --e)
    a[static_cast<size_t>(hi - e)] = e >= 0 ? p.coeff(e) : Coeff(0);
  return LaurentJet(hi, lo, std::move(a));
}

LaurentJet LaurentJet::variable(long lo) {
  return from_polynomial(Polynomial::x(), lo);
}

const Coeff& LaurentJet::coeff(long e) const {
  static const Coeff zero(0);
  if (e > hi_) return zero;
  if (e < lo_) throw error("laurent jet: coefficient below truncation window");
  return a_[static_cast<size_t>(hi_ - e)];
}

LaurentJet LaurentJet::operator+(const LaurentJet& o) const {
  long hi = std::max(hi_, o.hi_);
  long lo = std::max(lo_, o.lo_);
  if (lo > hi) lo = hi;
  std::vector<Coeff> a(static_cast<size_t>(hi - lo + 1));
  for (long e = hi; e >= lo; --e)
    a[static_cast<size_t>(hi - e)] = coeff(e) + o.coeff(e);
  return LaurentJet(hi, lo, std::move(a));
}

LaurentJet LaurentJet::operator-(const LaurentJet& o) const {
  return *this + o.scale(Coeff(-1));
}

LaurentJet LaurentJet::operator*(const LaurentJet& o) const {
  long hi = hi_ + o.hi_;
  // Unknown tails below each factor's window limit what the product knows.
  long lo = std::max(lo_ + o.hi_, o.lo_ + hi_);
  if (lo > hi) lo = hi;
  std::vector<Coeff> a(static_cast<size_t>(hi - lo + 1));
  for (long e1 = hi_; e1 >= lo_; --e1) {
    if (coeff(e1).is_zero()) continue;
    for (long e2 = o.hi_; e2 >= o.lo_; --e2) {
      long e = e1 + e2;
      if (e < lo || e > hi) continue;
      a[static_cast<size_t>(hi - e)] += coeff(e1) * o.coeff(e2);
    }
  }
  return LaurentJet(hi, lo, std::move(a));
}

LaurentJet LaurentJet::scale(const Coeff& c) const {
  std::vector<Coeff> a = a_;
  for (auto& x : a) x = x * c;
  return LaurentJet(hi_, lo_, std::move(a));
}

LaurentJet LaurentJet::shift(long k) const {
  return LaurentJet(hi_ + k, lo_ + k, a_);
}

LaurentJet LaurentJet::pow(unsigned k) const {
  if (k == 0) return from_polynomial(Polynomial::one(), lo_);
  LaurentJet acc = *this;
  for (unsigned i = 1; i < k; ++i) acc = acc * *this;
  return acc;
}

LaurentJet LaurentJet::inverse() const {
  const Coeff& lead = a_[0];
  if (lead.is_zero())
    throw error("laurent jet: inverse needs a nonzero leading coefficient");
  size_t len = a_.size();
  std::vector<Coeff> b(len);
  Coeff inv_lead = lead.inverse();
  b[0] = inv_lead;
  for (size_t k = 1; k < len; ++k) {
    Coeff s(0);
    for (size_t i = 1; i <= k; ++i) s += a_[i] * b[k - i];
    b[k] = -s * inv_lead;
  }
  long hi = -hi_;
  return LaurentJet(hi, hi - static_cast<long>(len) + 1, std::move(b));
}

bool LaurentJet::is_zero_down_to(long from) const {
  if (from < lo_) throw error("laurent jet: zero test below truncation window");
  for (long e = hi_; e >= from; --e)
    if (!coeff(e).is_zero()) return false;
  return true;
}

LaurentJet apply_tail(const std::vector<Coeff>& tail, const LaurentJet& w) {
  LaurentJet winv = w.inverse();
  LaurentJet sum = LaurentJet::from_polynomial(Polynomial::one(), winv.lo());
  LaurentJet power = winv;
  for (size_t j = 0; j < tail.size(); ++j) {
    if (!tail[j].is_zero()) sum = sum + power.scale(tail[j]);
    if (j + 1 < tail.size()) power = power * winv;
  }
  return w * sum;
}

std::vector<Coeff> conjugating_tail(const Polynomial& P, long order) {
  long n = P.degree();
  if (n < 2) throw invalid_input_error("conjugating tail needs degree >= 2");
  if (!P.coeff(n - 1).is_zero())
    throw invalid_input_error("conjugating tail needs a centered polynomial");
  if (order < 1) throw invalid_input_error("conjugating tail: order must be positive");
  Coeff p = P.coeff(n);

  // Window margins chosen so both sides stay exact down to z^(n - order).
  LaurentJet jet_p = LaurentJet::from_polynomial(P, -order - n);
  LaurentJet var = LaurentJet::variable(1 - order - n);

  std::vector<Coeff> tail(static_cast<size_t>(order));
  auto defect = [&]() {
    // phi(P) - lc(P) * phi^n, which must vanish identically.
    LaurentJet lhs = apply_tail(tail, jet_p);
    LaurentJet rhs = apply_tail(tail, var).pow(static_cast<unsigned>(n)).scale(p);
    return lhs - rhs;
  };
  Coeff step = (p * Coeff(n)).inverse();
  for (long k = 1; k <= order; ++k)
    tail[static_cast<size_t>(k - 1)] = defect().coeff(n - k) * step;
  if (!defect().is_zero_down_to(n - order))
    throw error("conjugating tail: re-expansion check failed");
  return tail;
}

std::vector<Coeff> inverse_tail(const std::vector<Coeff>& phi_tail, long order) {
  if (order < 1) throw invalid_input_error("inverse tail: order must be positive");
  long margin = order + 2;
  LaurentJet phi = apply_tail(phi_tail, LaurentJet::variable(1 - order - margin));
  LaurentJet var = LaurentJet::variable(1 - order - margin);

  std::vector<Coeff> tail(static_cast<size_t>(order));
  auto defect = [&]() { return apply_tail(tail, phi) - var; };
  for (long k = 1; k <= order; ++k) {
    // e_k enters the coefficient of z^(1-k) with unit weight.
    tail[static_cast<size_t>(k - 1)] = -defect().coeff(1 - k);
  }
  if (!defect().is_zero_down_to(1 - order))
    throw error("inverse tail: re-expansion check failed");
  return tail;
}

BottcherSeries bottcher_expand(const Polynomial& P, long order) {
  long n = P.degree();
  if (n < 2) throw invalid_input_error("bottcher_expand needs degree >= 2");
  if (!(P.coeff(n) == Coeff(1)))
    throw invalid_input_error("bottcher_expand needs a monic polynomial");
  if (!P.coeff(n - 1).is_zero())
    throw invalid_input_error("bottcher_expand needs a centered polynomial");
  return BottcherSeries{P, conjugating_tail(P, order), order};
}

}  // namespace ratsemi
