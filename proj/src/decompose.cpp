#include "ratsemi/decompose.hpp"

#include <algorithm>
#include <utility>

#include "ratsemi/errors.hpp"

namespace ratsemi {

namespace {

// Basis of the right nullspace of an exact rows x cols matrix, by
// Gauss-Jordan elimination over the coefficient field.
std::vector<std::vector<Coeff>> nullspace_basis(
    std::vector<std::vector<Coeff>> m, size_t cols) {
  const size_t rows = m.size();
  std::vector<size_t> pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    const Coeff inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Coeff f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_cols.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Coeff>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Coeff> v(cols, Coeff(0));
    v[c] = Coeff(1);
    for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Decomposition::Decomposition(RationalFunction left_, RationalFunction right_,
                             RationalFunction target_)
    : left(std::move(left_)),
      right(std::move(right_)),
      target(std::move(target_)) {
  if (compose(left, right) != target)
    throw invalid_input_error("decomposition does not recompose to its target");
}

DecompositionClass make_class(Decomposition dec) {
  const bool trivial = dec.left.degree() == 1 || dec.right.degree() == 1;
  if (dec.right.degree() == 1) {
    // A Mobius right factor can be absorbed entirely: representative (P, z).
    RationalFunction target = dec.target;
    return DecompositionClass{
        Decomposition(target, RationalFunction::identity(), target), trivial};
  }
  if (dec.right.is_polynomial()) {
    const Polynomial& u = dec.right.num();
    const Coeff lead = u.leading();
    const Coeff c0 = u.coeff(0);
    if (!(lead == Coeff(1)) || !c0.is_zero()) {
      // mu(y) = (y - c0)/lead makes the right factor monic and centered.
      const Coeff a = lead.inverse();
      const Mobius mu = Mobius::affine(a, -(a * c0));
      RationalFunction new_right((u - Polynomial(c0)) * a);
      RationalFunction new_left =
          compose(dec.left, mu.inverse().to_rational());
      return DecompositionClass{Decomposition(std::move(new_left),
                                              std::move(new_right),
                                              dec.target),
                                trivial};
    }
  }
  return DecompositionClass{std::move(dec), trivial};
}

std::optional<RationalFunction> right_factor_quotient(
    const RationalFunction& w, const RationalFunction& b) {
  if (b.degree() < 1)
    throw invalid_input_error("right_factor_quotient: inner factor is constant");
  if (w.degree() == 0) return w;  // constant quotient
  if (w.degree() % b.degree() != 0) return std::nullopt;
  const long e = w.degree() / b.degree();

  if (w.is_polynomial() && b.is_polynomial()) {
    // Base-b expansion of w: each digit is the remainder mod b.  A polynomial
    // outer factor exists iff every digit is a constant, and then those
    // constants are its coefficients.  (A non-polynomial outer factor is
    // impossible here: its denominator would put poles into w.)
    Polynomial rest = w.num();
    const Polynomial& base = b.num();
    std::vector<Coeff> digits;
    while (!rest.is_zero()) {
      auto [q, r] = rest.divmod(base);
      if (r.degree() > 0) return std::nullopt;
      digits.push_back(r.is_zero() ? Coeff(0) : r.coeff(0));
      rest = std::move(q);
    }
    return RationalFunction(Polynomial(std::move(digits)));
  }

  // General case.  Write the candidate as Y = (sum u_i y^i)/(sum v_i y^i)
  // with i <= e.  Substituting b = nb/db and clearing denominators turns
  // Y(b) = w into the identity
  //   (sum u_i nb^i db^(e-i)) * den_w  =  num_w * (sum v_i nb^i db^(e-i)),
  // homogeneous linear in (u, v).  Each nullspace vector is re-verified by
  // exact composition; the quotient, if any, is unique as a function.
  const Polynomial& nb = b.num();
  const Polynomial& db = b.den();
  std::vector<Polynomial> hom(static_cast<size_t>(e) + 1);
  for (long i = 0; i <= e; ++i)
    hom[static_cast<size_t>(i)] = nb.pow(static_cast<unsigned>(i)) *
                                  db.pow(static_cast<unsigned>(e - i));
  const size_t terms = static_cast<size_t>(e) + 1;
  std::vector<Polynomial> col(2 * terms);
  int max_deg = 0;
  for (size_t i = 0; i < terms; ++i) {
    col[i] = hom[i] * w.den();
    col[terms + i] = -(w.num() * hom[i]);
    max_deg = std::max({max_deg, col[i].degree(), col[terms + i].degree()});
  }
  std::vector<std::vector<Coeff>> m(static_cast<size_t>(max_deg) + 1,
                                    std::vector<Coeff>(2 * terms, Coeff(0)));
  for (size_t j = 0; j < 2 * terms; ++j)
    for (size_t r = 0; r <= static_cast<size_t>(max_deg); ++r)
      m[r][j] = col[j].coeff(r);

  for (const auto& v : nullspace_basis(std::move(m), 2 * terms)) {
    std::vector<Coeff> uc(v.begin(), v.begin() + static_cast<long>(terms));
    std::vector<Coeff> vc(v.begin() + static_cast<long>(terms), v.end());
    Polynomial den(std::move(vc));
    if (den.is_zero()) continue;
    RationalFunction y(Polynomial(std::move(uc)), std::move(den));
    if (compose(y, b) == w) return y;
  }
  return std::nullopt;
}

std::vector<DecompositionClass> left_factor_complement(const Polynomial& w,
                                                       long right_degree) {
  const long n = w.degree();
  const long d = right_degree;
  if (n < 2 || d <= 1 || d >= n || n % d != 0)
    throw invalid_input_error(
        "left_factor_complement: right degree must be a proper divisor of the "
        "target degree");
  const long e = n / d;
  const Coeff lead = w.leading();

  // Any splitting normalizes to a monic right factor u with u(0) = 0, and
  // then u is forced: in w = sum v_j u^j only lead * u^e reaches above degree
  // n - d, so the coefficient of z^(n-m) for m < d pins down u_{d-m} through
  // a triangular system (u_{d-m} enters linearly there with weight e * lead).
  std::vector<Coeff> u(static_cast<size_t>(d) + 1, Coeff(0));
  u[static_cast<size_t>(d)] = Coeff(1);
  const Coeff step = (lead * Coeff(e)).inverse();
  for (long m = 1; m < d; ++m) {
    const Polynomial t =
        Polynomial(u).pow(static_cast<unsigned>(e)) * lead;
    u[static_cast<size_t>(d - m)] =
        (w.coeff(static_cast<size_t>(n - m)) -
         t.coeff(static_cast<size_t>(n - m))) *
        step;
  }
  Polynomial inner(std::move(u));

  auto outer = right_factor_quotient(RationalFunction(w),
                                     RationalFunction(inner));
  if (!outer) return {};
  return {DecompositionClass{Decomposition(std::move(*outer),
                                           RationalFunction(std::move(inner)),
                                           RationalFunction(w)),
                             false}};
}

std::vector<DecompositionClass> all_splittings(const RationalFunction& p) {
  const long n = p.degree();
  if (n < 2)
    throw invalid_input_error("all_splittings: degree must be at least 2");
  std::vector<DecompositionClass> out;
  out.push_back(
      DecompositionClass{Decomposition(p, RationalFunction::identity(), p),
                         true});
  if (p.is_polynomial()) {
    const Polynomial& w = p.num();
    for (long d = 2; d < n; ++d) {
      if (n % d != 0) continue;
      auto found = left_factor_complement(w, d);
      out.insert(out.end(), std::make_move_iterator(found.begin()),
                 std::make_move_iterator(found.end()));
    }
    // Degree-n right factor, normalized monic and centered.
    const Coeff lead = w.leading();
    const Coeff c0 = w.coeff(0);
    RationalFunction right((w - Polynomial(c0)) * lead.inverse());
    RationalFunction left(Polynomial{c0, lead});
    out.push_back(DecompositionClass{
        Decomposition(std::move(left), std::move(right), p), true});
  } else {
    out.push_back(
        DecompositionClass{Decomposition(RationalFunction::identity(), p, p),
                           true});
  }
  return out;
}

std::optional<Mobius> mobius_between(const RationalFunction& u1,
                                     const RationalFunction& u2) {
  if (u1.degree() < 1 || u2.degree() < 1)
    throw invalid_input_error("mobius_between: inputs must be nonconstant");
  if (u1.degree() != u2.degree()) return std::nullopt;
  // (a n1 + b d1) d2 - (c n1 + d d1) n2 = 0, linear in (a, b, c, d).  For
  // nonconstant reduced inputs the solution space is at most a scalar line,
  // so the single basis vector decides existence.
  const Polynomial col_a = u1.num() * u2.den();
  const Polynomial col_b = u1.den() * u2.den();
  const Polynomial col_c = -(u1.num() * u2.num());
  const Polynomial col_d = -(u1.den() * u2.num());
  const int max_deg = std::max({col_a.degree(), col_b.degree(),
                                col_c.degree(), col_d.degree()});
  if (max_deg < 0) return std::nullopt;
  std::vector<std::vector<Coeff>> m(static_cast<size_t>(max_deg) + 1,
                                    std::vector<Coeff>(4, Coeff(0)));
  for (size_t r = 0; r <= static_cast<size_t>(max_deg); ++r)
    m[r] = {col_a.coeff(r), col_b.coeff(r), col_c.coeff(r), col_d.coeff(r)};

  for (const auto& v : nullspace_basis(std::move(m), 4)) {
    if ((v[0] * v[3] - v[1] * v[2]).is_zero()) continue;
    Mobius mu(v[0], v[1], v[2], v[3]);
    if (compose(mu.to_rational(), u1) == u2) return mu;
  }
  return std::nullopt;
}

bool same_class(const Decomposition& a, const Decomposition& b) {
  if (a.target != b.target) return false;
  if (a.right.degree() != b.right.degree()) return false;
  return mobius_between(a.right, b.right).has_value();
}

}  // namespace ratsemi
