#include "ratsemi/class_graph.hpp"

#include <numeric>
#include <utility>

#include "ratsemi/errors.hpp"
#include "ratsemi/special.hpp"

namespace ratsemi {

namespace {

// The t with q = r * t^k where every prime exponent of r lies in [0, k):
// exponents over the integers (denominator primes count negative) are reduced
// to their canonical residue mod k, so q and q * s^k always share one r.  For
// odd k the sign of t absorbs the sign of q, leaving r positive; for even k
// the sign stays in r.
mpq_class kth_power_extract(const mpq_class& q, unsigned k) {
  auto factor = [](mpz_class v) {
    std::vector<std::pair<mpz_class, long>> fs;
    for (mpz_class p = 2; p * p <= v; ++p) {
      if (v % p != 0) continue;
      long e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      fs.emplace_back(p, e);
    }
    if (v > 1) fs.emplace_back(v, 1);
    return fs;
  };
  mpz_class num = q.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  const long kl = static_cast<long>(k);
  mpq_class t(1);
  for (const auto& [p, e] : factor(num))
    for (long i = 0; i < e / kl; ++i) t *= p;
  for (const auto& [p, e] : factor(q.get_den())) {
    // exponent -e; remainder in [0, k) pushes the whole prime into t
    const long quot = -((e + kl - 1) / kl);
    for (long i = 0; i < -quot; ++i) t /= p;
  }
  if (negative && k % 2 == 1) t = -t;
  return t;
}

// a * p(z / a): conjugation by the scaling z -> a z.
Polynomial scale_conjugate(const Polynomial& p, const Coeff& a) {
  return p.compose(Polynomial{Coeff(0), a.inverse()}) * a;
}

}  // namespace

RationalFunction elementary_transform(const Decomposition& dec) {
  return compose(dec.right, dec.left);
}

Polynomial vertex_normal_form(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2)
    throw invalid_input_error("vertex_normal_form: degree must be at least 2");
  // Center: the translation part of an affine conjugation is forced by the
  // subleading coefficient, so this step is canonical on its own.
  const Coeff shift = p.coeff(static_cast<size_t>(n) - 1) /
                      (p.leading() * Coeff(n));
  Polynomial r = p.compose(Polynomial{-shift, Coeff(1)}) + Polynomial(shift);
  if (!r.leading().is_rational()) return r;  // centering only

  // Scale: conjugating by z -> a z divides the leading coefficient by
  // a^(n-1), so its (n-1)-power-free part is the class invariant.
  const mpq_class t = kth_power_extract(r.leading().rat(), static_cast<unsigned>(n - 1));
  if (t != 1) r = scale_conjugate(r, Coeff(t));

  if (n % 2 == 1) {
    // Odd degree leaves a z -> -z freedom (a and -a scale alike).  It flips
    // the sign of every even-index coefficient; make the top one positive.
    for (int k = n - 1; k >= 0; --k) {
      if (k % 2 != 0) continue;
      const Coeff ck = r.coeff(static_cast<size_t>(k));
      if (ck.is_zero()) continue;
      if (!ck.is_rational()) break;
      if (ck.rat() < 0) r = -r.compose(Polynomial{Coeff(0), Coeff(-1)});
      break;
    }
  }
  return r;
}

std::optional<Mobius> conjugacy_test(const Polynomial& p, const Polynomial& q) {
  const int n = p.degree();
  if (n < 2 || q.degree() < 2)
    throw invalid_input_error("conjugacy_test: degrees must be at least 2");
  if (q.degree() != n) return std::nullopt;

  const Coeff cp = p.coeff(static_cast<size_t>(n) - 1) / (p.leading() * Coeff(n));
  const Coeff cq = q.coeff(static_cast<size_t>(n) - 1) / (q.leading() * Coeff(n));
  const Mobius tau_p = Mobius::affine(Coeff(1), cp);
  const Mobius tau_q = Mobius::affine(Coeff(1), cq);
  const Polynomial pc = p.compose(Polynomial{-cp, Coeff(1)}) + Polynomial(cp);
  const Polynomial qc = q.compose(Polynomial{-cq, Coeff(1)}) + Polynomial(cq);

  // Between centered polynomials only scalings remain, and the scale obeys
  // a^(n-1) = lead(pc)/lead(qc).  Witnesses are sought over the rationals.
  const Coeff ratio = pc.leading() / qc.leading();
  if (!ratio.is_rational()) return std::nullopt;
  const auto root = rational_kth_root(ratio.rat(), static_cast<unsigned>(n - 1));
  if (!root) return std::nullopt;
  std::vector<Coeff> candidates{Coeff(*root)};
  if ((n - 1) % 2 == 0) candidates.push_back(Coeff(-*root));

  const RationalFunction pf(p), qf(q);
  for (const Coeff& a : candidates) {
    const Mobius mu =
        tau_q.inverse().compose(Mobius::affine(a, Coeff(0))).compose(tau_p);
    if (conjugate(pf, mu) == qf) return mu;
  }
  return std::nullopt;
}

ClassGraph build_class_graph(const Polynomial& p, size_t max_vertices,
                             bool include_trivial) {
  if (p.degree() < 2)
    throw invalid_input_error("build_class_graph: degree must be at least 2");
  if (max_vertices == 0)
    throw invalid_input_error("build_class_graph: max_vertices must be positive");
  const SpecialnessReport report = is_special_polynomial(p);
  if (report.kind != SpecialKind::not_special_polynomial)
    throw invalid_input_error(
        std::string("build_class_graph: class closure is infinite for a ") +
        to_string(report.kind) + " input");

  ClassGraph g;
  g.vertices.emplace_back(vertex_normal_form(p));

  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const Polynomial rep = g.vertices[i].num();
    const long n = rep.degree();
    for (long d = 2; d < n; ++d) {
      if (n % d != 0) continue;
      for (auto& cls : left_factor_complement(rep, d)) {
        const RationalFunction transformed =
            elementary_transform(cls.representative);
        const Polynomial nf = vertex_normal_form(transformed.num());
        size_t j = g.vertices.size();
        for (size_t k = 0; k < g.vertices.size(); ++k) {
          if (g.vertices[k].num() == nf) {
            j = k;
            break;
          }
        }
        if (j == g.vertices.size()) {
          if (g.vertices.size() >= max_vertices) {
            g.complete = false;
            continue;
          }
          g.vertices.emplace_back(nf);
        }
        // The mirrored pair (U, V) realizes the same undirected edge from the
        // other side, so record each solution once: from the lower-index
        // endpoint, and loops only for the smaller half of the divisor pair.
        if (j > i) {
          g.edges.push_back(ClassGraph::Edge{i, j, std::move(cls)});
        } else if (j == i && d * d <= n) {
          g.edges.push_back(ClassGraph::Edge{i, i, std::move(cls)});
        }
      }
    }
  }

  if (include_trivial) {
    // One loop per vertex stands for the mirrored degree-1 splitting pair
    // (P, z) / (z, P), mirroring the loop convention above.
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      RationalFunction r = g.vertices[i];
      g.edges.push_back(ClassGraph::Edge{
          i, i,
          DecompositionClass{
              Decomposition(r, RationalFunction::identity(), r), true}});
    }
  }
  return g;
}

long betti_rank(const ClassGraph& g) {
  if (!g.complete)
    throw invalid_input_error("betti_rank: graph construction was cut off");
  std::vector<size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&parent](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);
  long components = 0;
  for (size_t v = 0; v < parent.size(); ++v)
    if (find(v) == v) ++components;
  return static_cast<long>(g.edges.size()) -
         static_cast<long>(g.vertices.size()) + components;
}

std::string to_dot(const ClassGraph& g) {
  std::string out = "graph gamma {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + g.vertices[i].str() +
           "\"];\n";
  for (const auto& e : g.edges)
    out += "  v" + std::to_string(e.from) + " -- v" + std::to_string(e.to) +
           " [label=\"" + std::to_string(e.witness.representative.right.degree()) +
           "|" + std::to_string(e.witness.representative.left.degree()) +
           "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace ratsemi
