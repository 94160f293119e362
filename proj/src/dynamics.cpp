#include "ratsemi/dynamics.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>

#include "ratsemi/decompose.hpp"
#include "ratsemi/errors.hpp"
#include "ratsemi/poly.hpp"

namespace ratsemi {

namespace {

void require_degree_two(const RationalFunction& f, const char* op) {
  if (f.degree() < 2)
    throw invalid_input_error(std::string(op) +
                              ": degrees must be at least 2");
}

void require_positive(long v, const char* op, const char* what) {
  if (v < 1)
    throw invalid_input_error(std::string(op) + ": " + what +
                              " must be positive");
}

// Exponent pairs with dx^k == dp^l, 1 <= k, l <= bound, ordered by
// increasing k + l and then k.  Computed in exact big-integer arithmetic so
// large bounds cannot wrap.
std::vector<std::pair<long, long>> degree_matched_pairs(long dx, long dp,
                                                        long bound) {
  std::vector<std::pair<long, long>> out;
  for (long s = 2; s <= 2 * bound; ++s) {
    for (long k = std::max(1L, s - bound); k <= std::min(bound, s - 1); ++k) {
      const long l = s - k;
      mpz_class px, pp;
      mpz_pow_ui(px.get_mpz_t(), mpz_class(dx).get_mpz_t(),
                 static_cast<unsigned long>(k));
      mpz_pow_ui(pp.get_mpz_t(), mpz_class(dp).get_mpz_t(),
                 static_cast<unsigned long>(l));
      if (px == pp) out.emplace_back(k, l);
    }
  }
  return out;
}

}  // namespace

bool check_sisis(const RationalFunction& x, const RationalFunction& p, long k,
                 long l) {
  require_degree_two(x, "check_sisis");
  require_degree_two(p, "check_sisis");
  require_positive(k, "check_sisis", "k");
  require_positive(l, "check_sisis", "l");
  const RationalFunction xk = iterate(x, static_cast<unsigned>(k));
  const RationalFunction pl = iterate(p, static_cast<unsigned>(l));
  return compose(xk, xk) == compose(xk, pl) &&
         compose(pl, pl) == compose(pl, xk);
}

std::optional<SisisWitness> search_sisis(const RationalFunction& x,
                                         const RationalFunction& p,
                                         long bound) {
  require_degree_two(x, "search_sisis");
  require_degree_two(p, "search_sisis");
  require_positive(bound, "search_sisis", "bound");
  for (const auto& [k, l] : degree_matched_pairs(x.degree(), p.degree(), bound))
    if (check_sisis(x, p, k, l)) return SisisWitness{k, l};
  return std::nullopt;
}

bool check_eq_system(const RationalFunction& f, const RationalFunction& g) {
  return compose(f, f) == compose(f, g) && compose(g, g) == compose(g, f);
}

std::pair<RationalFunction, RationalFunction> build_from_fiber_pair(
    const RationalFunction& a, const RationalFunction& x,
    const RationalFunction& y) {
  if (compose(a, x) != compose(a, y))
    throw invalid_input_error("build_from_fiber_pair: A o X = A o Y fails");
  std::pair<RationalFunction, RationalFunction> fg{compose(x, a),
                                                   compose(y, a)};
  if (!check_eq_system(fg.first, fg.second))
    throw error("build_from_fiber_pair: construction law violated");
  return fg;
}

std::vector<FiberTriple> even_construction(const RationalFunction& u,
                                           long factor_degree) {
  if (!u.is_polynomial())
    throw invalid_input_error("even_construction: polynomial mode only");
  if (u.degree() < 1)
    throw invalid_input_error("even_construction: U must be nonconstant");
  if (factor_degree < 0)
    throw invalid_input_error(
        "even_construction: factor_degree must be nonnegative");
  const RationalFunction square(Polynomial{0, 0, 1});
  const RationalFunction flip(Polynomial{0, -1});
  const RationalFunction f = compose(u, square);

  std::vector<FiberTriple> out;
  for (const DecompositionClass& cls : all_splittings(f)) {
    const RationalFunction& x = cls.representative.right;
    if (factor_degree > 0 && x.degree() != factor_degree) continue;
    const RationalFunction y = compose(x, flip);
    if (x == y) continue;  // even right factor: no new fiber pair
    const RationalFunction& a = cls.representative.left;
    if (compose(a, x) != compose(a, y))
      throw error("even_construction: symmetry of U(z^2) violated");
    out.push_back(FiberTriple{a, x, y});
  }
  return out;
}

std::optional<std::pair<long, long>> common_iterate(const RationalFunction& a,
                                                    const RationalFunction& b,
                                                    long bound) {
  require_degree_two(a, "common_iterate");
  require_degree_two(b, "common_iterate");
  require_positive(bound, "common_iterate", "bound");
  for (const auto& [k, l] : degree_matched_pairs(a.degree(), b.degree(), bound))
    if (iterate(a, static_cast<unsigned>(k)) ==
        iterate(b, static_cast<unsigned>(l)))
      return std::make_pair(k, l);
  return std::nullopt;
}

bool verify_reversibility(const RationalFunction& a, const RationalFunction& b,
                          const ReversibilityWitness& w) {
  if (w.side == ReversibilitySide::left)
    return compose(a, w.x) == compose(b, w.y);
  return compose(w.x, a) == compose(w.y, b);
}

std::optional<std::pair<long, long>> right_reversibility_equalities(
    const RationalFunction& a, const RationalFunction& b, long bound) {
  require_degree_two(a, "right_reversibility_equalities");
  require_degree_two(b, "right_reversibility_equalities");
  require_positive(bound, "right_reversibility_equalities", "bound");
  if (const auto w = search_sisis(a, b, bound))
    return std::make_pair(w->k, w->l);
  return std::nullopt;
}

std::optional<WordRelation> free_pair_certificate(const RationalFunction& a,
                                                  const RationalFunction& b,
                                                  long word_length) {
  require_degree_two(a, "free_pair_certificate");
  require_degree_two(b, "free_pair_certificate");
  require_positive(word_length, "free_pair_certificate", "word_length");

  struct Entry {
    std::string word;
    RationalFunction value;
  };
  // Canonical printed form works as a collision key because rational
  // functions are stored reduced with monic denominator.
  std::map<std::string, std::string> seen;
  std::vector<Entry> frontier = {{"", RationalFunction::identity()}};
  for (long len = 1; len <= word_length; ++len) {
    std::vector<Entry> next;
    next.reserve(frontier.size() * 2);
    for (const Entry& e : frontier) {
      for (const char c : {'A', 'B'}) {
        Entry ext{e.word + c, compose(e.value, c == 'A' ? a : b)};
        const auto [it, inserted] = seen.try_emplace(ext.value.str(), ext.word);
        // The first collision never shares a trailing (first-applied)
        // letter: cancelling it would give a shorter equal-value pair that
        // would have collided earlier in the breadth-first order.
        if (!inserted) return WordRelation{it->second, ext.word, ext.value};
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace ratsemi
