#include "ratsemi/commutant.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ratsemi/decompose.hpp"
#include "ratsemi/errors.hpp"
#include "ratsemi/series.hpp"
#include "ratsemi/special.hpp"

namespace ratsemi {

std::vector<CommutantClass> commutant_enumerate(const Polynomial& p,
                                                long max_degree) {
  const int n = p.degree();
  if (n < 2)
    throw invalid_input_error("commutant_enumerate: degree must be at least 2");
  if (max_degree < 1)
    throw invalid_input_error("commutant_enumerate: max_degree must be positive");
  if (!p.is_monic() || !p.coeff(static_cast<size_t>(n) - 1).is_zero())
    throw invalid_input_error(
        "commutant_enumerate: conjugate the base to monic centered form first");
  const SpecialnessReport sp = is_special_polynomial(p);
  if (sp.kind != SpecialKind::not_special_polynomial)
    throw invalid_input_error(
        std::string("commutant_enumerate: the commutant of a ") +
        to_string(sp.kind) + " base is infinite");

  // In the conjugating coordinate at infinity the base acts as z^n, whose
  // commuting expansions are exactly eps * z^d with eps^(n-1) = 1.  Pull each
  // of these back, read off the top d + 1 coefficients (exact: truncation
  // error stays strictly below exponent zero at this order), and let exact
  // composition accept or reject the candidate.  A true commutant always
  // reproduces its own coefficients, so nothing of degree <= max_degree is
  // missed; a pullback that is not actually a polynomial yields a candidate
  // that fails the composition check.
  const long T = max_degree + n + 8;
  const std::vector<Coeff> phi = conjugating_tail(p, T);
  const std::vector<Coeff> psi = inverse_tail(phi, T);
  const Coeff zeta = Coeff::zeta(static_cast<unsigned>(n - 1));
  const RationalFunction pf(p);

  const LaurentJet phi_jet = apply_tail(phi, LaurentJet::variable(-T));
  LaurentJet image = phi_jet;  // phi^d, raised incrementally
  std::vector<RationalFunction> survivors;
  for (long d = 1; d <= max_degree; ++d) {
    if (d > 1) image = image * phi_jet;
    for (int j = 0; j < n - 1; ++j) {
      const Coeff eps = zeta.pow(j);
      const LaurentJet x_jet = apply_tail(psi, image.scale(eps));
      if (x_jet.lo() > 0 || x_jet.hi() < d)
        throw precision_error("commutant_enumerate: truncation order " +
                              std::to_string(T) + " insufficient");
      std::vector<Coeff> c(static_cast<size_t>(d) + 1);
      for (long e = 0; e <= d; ++e) c[static_cast<size_t>(e)] = x_jet.coeff(e);
      RationalFunction x{Polynomial(std::move(c))};
      if (compose(x, pf) == compose(pf, x)) survivors.push_back(std::move(x));
    }
  }

  std::vector<CommutantClass> classes;
  for (RationalFunction& x : survivors) {
    bool placed = false;
    for (CommutantClass& cls : classes) {
      if (class_equal(cls.representative, x, pf, 32).equal) {
        cls.members.push_back(std::move(x));
        placed = true;
        break;
      }
    }
    if (placed) continue;
    unsigned conductor = 1;
    for (const Coeff& c : x.num().coeffs())
      conductor = std::max(conductor, c.conductor());
    const long deg = x.degree();
    classes.push_back(CommutantClass{x, deg, {std::move(x)}, conductor});
  }
  return classes;
}

ClassVerdict class_equal(const RationalFunction& q1, const RationalFunction& q2,
                         const RationalFunction& p, long l_max) {
  const long n = p.degree();
  if (n < 2)
    throw invalid_input_error("class_equal: base degree must be at least 2");
  if (q1.degree() < 1 || q2.degree() < 1)
    throw invalid_input_error("class_equal: members must be nonconstant");
  if (l_max < 0)
    throw invalid_input_error("class_equal: l_max must be nonnegative");
  if (compose(q1, p) != compose(p, q1) || compose(q2, p) != compose(p, q2))
    throw invalid_input_error("class_equal: inputs must commute with the base");

  const RationalFunction* small = &q1;
  const RationalFunction* large = &q2;
  if (small->degree() > large->degree()) std::swap(small, large);
  if (small->degree() == large->degree()) return {q1 == q2, false};
  // deg(small) * n^l1 = deg(large) * n^l2 forces the exponent gap exactly.
  if (large->degree() % small->degree() != 0) return {false, false};
  long ratio = large->degree() / small->degree();
  long t = 0;
  while (ratio % n == 0) {
    ratio /= n;
    ++t;
  }
  if (ratio != 1) return {false, false};
  if (t > l_max) return {false, true};
  return {compose(*small, iterate(p, static_cast<unsigned>(t))) == *large,
          false};
}

std::vector<Mobius> aut_group(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2)
    throw invalid_input_error("aut_group: degree must be at least 2");
  // mu = a z + b with mu o P = P o mu: the top coefficient forces
  // a^(n-1) = 1 and the subleading one forces b, so each root of unity gives
  // exactly one candidate.
  const Coeff zeta = Coeff::zeta(static_cast<unsigned>(n - 1));
  const Coeff top = p.leading();
  const Coeff sub = p.coeff(static_cast<size_t>(n) - 1);
  const RationalFunction pf(p);
  std::vector<Mobius> out;
  for (int j = 0; j < n - 1; ++j) {
    const Coeff a = zeta.pow(j);
    const Coeff b = sub * (a - Coeff(1)) / (top * Coeff(n));
    const Mobius mu = Mobius::affine(a, b);
    const RationalFunction m = mu.to_rational();
    if (compose(m, pf) == compose(pf, m)) out.push_back(mu);
  }
  return out;
}

std::vector<Mobius> aut_group(
    const RationalFunction& f,
    const std::optional<std::vector<Mobius>>& candidates) {
  if (candidates) {
    std::vector<Mobius> out;
    for (const Mobius& mu : *candidates) {
      const RationalFunction m = mu.to_rational();
      if (compose(m, f) == compose(f, m)) out.push_back(mu);
    }
    return out;
  }
  if (f.is_polynomial()) return aut_group(f.num());
  throw invalid_input_error(
      "aut_group: provide candidates for non-polynomial functions");
}

namespace {

bool is_indecomposable(const Polynomial& p) {
  const long n = p.degree();
  for (long d = 2; d < n; ++d)
    if (n % d == 0 && !left_factor_complement(p, d).empty()) return false;
  return true;
}

}  // namespace

GroupTable group_table(const Polynomial& p, long max_degree, long l_max) {
  GroupTable g;
  g.elements = commutant_enumerate(p, max_degree);
  const size_t m = g.elements.size();
  g.table.assign(m, std::vector<size_t>(m, SIZE_MAX));
  const RationalFunction pf(p);

  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      const RationalFunction prod = compose(g.elements[i].representative,
                                            g.elements[j].representative);
      size_t found = SIZE_MAX;
      for (size_t k = 0; k < m && found == SIZE_MAX; ++k)
        if (class_equal(g.elements[k].representative, prod, pf, l_max).equal)
          found = k;
      if (found == SIZE_MAX) {
        g.complete = false;
        continue;
      }
      g.table[i][j] = found;
    }
  }
  if (!g.complete) return g;

  for (size_t k = 0; k < m && g.identity_index == SIZE_MAX; ++k) {
    bool neutral = true;
    for (size_t j = 0; j < m && neutral; ++j)
      neutral = g.table[k][j] == j && g.table[j][k] == j;
    if (neutral) g.identity_index = k;
  }
  if (g.identity_index == SIZE_MAX)
    throw error("group_table: closed table without an identity element");

  std::vector<size_t> inverse(m, SIZE_MAX);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (g.table[i][j] == g.identity_index &&
          g.table[j][i] == g.identity_index)
        inverse[i] = j;
  for (size_t i = 0; i < m; ++i)
    if (inverse[i] == SIZE_MAX)
      throw error("group_table: element without an inverse");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw error("group_table: associativity failure");

  if (is_indecomposable(p) && m != aut_group(p).size())
    throw error(
        "group_table: quotient order disagrees with the automorphism count "
        "for an indecomposable base");

  // Metacyclic search: some cyclic subgroup <h>, normal, with cyclic
  // quotient.  Group orders here are desk-scale, so brute force suffices.
  for (size_t h = 0; h < m && !g.metacyclic; ++h) {
    std::vector<bool> in_sub(m, false);
    std::vector<size_t> sub;
    size_t cur = g.identity_index;
    while (!in_sub[cur]) {
      in_sub[cur] = true;
      sub.push_back(cur);
      cur = g.table[cur][h];
    }
    bool normal = true;
    for (size_t x = 0; x < m && normal; ++x)
      for (size_t a : sub)
        if (!in_sub[g.table[g.table[x][a]][inverse[x]]]) {
          normal = false;
          break;
        }
    if (!normal) continue;
    const size_t quotient_order = m / sub.size();
    for (size_t x = 0; x < m && !g.metacyclic; ++x) {
      size_t t = 1;
      size_t acc = x;
      while (!in_sub[acc]) {
        acc = g.table[acc][x];
        ++t;
      }
      if (t == quotient_order) g.metacyclic = true;
    }
  }
  return g;
}

std::optional<long> cinf_membership(const RationalFunction& x,
                                    const RationalFunction& p, long s_max) {
  if (x.degree() < 1 || p.degree() < 1)
    throw invalid_input_error("cinf_membership: inputs must be nonconstant");
  RationalFunction ps = p;
  for (long s = 1; s <= s_max; ++s) {
    if (compose(x, ps) == compose(ps, x)) return s;
    if (s < s_max) ps = compose(ps, p);
  }
  return std::nullopt;
}

}  // namespace ratsemi
