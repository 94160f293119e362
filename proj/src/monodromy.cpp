#include "ratsemi/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "ratsemi/errors.hpp"
#include "ratsemi/numeric.hpp"

namespace ratsemi {
namespace {

using numeric::Cx;
using numeric::DD;

// ---------------------------------------------------------------------------
// Scalar and coefficient conversion.
// ---------------------------------------------------------------------------

template <typename R>
R from_rat(const mpq_class& q);

template <>
double from_rat<double>(const mpq_class& q) {
  return q.get_d();
}

template <>
DD from_rat<DD>(const mpq_class& q) {
  const double hi = q.get_d();
  const mpq_class rest = q - mpq_class(hi);
  return DD(hi, rest.get_d());
}

// Primitive m-th root of unity at working precision: double seed, Newton
// steps on z^m - 1.  Deterministic.
template <typename R>
Cx<R> primitive_root(unsigned m) {
  const double ang = 2.0 * M_PI / double(m);
  Cx<R> z{R(std::cos(ang)), R(std::sin(ang))};
  for (int it = 0; it < 3; ++it) {
    Cx<R> pw{R(1.0), R(0.0)};
    for (unsigned j = 0; j + 1 < m; ++j) pw = pw * z;
    const Cx<R> f = pw * z - Cx<R>{R(1.0), R(0.0)};
    const Cx<R> df = Cx<R>{R(double(m)), R(0.0)} * pw;
    z = z - f / df;
  }
  return z;
}

template <typename R>
Cx<R> coeff_to_cx(const Coeff& c) {
  if (c.is_rational()) return {from_rat<R>(c.rat()), R(0.0)};
  const Cx<R> zeta = primitive_root<R>(c.conductor());
  Cx<R> acc{};
  Cx<R> pw{R(1.0), R(0.0)};
  for (const mpq_class& co : c.coords()) {
    acc = acc + Cx<R>{from_rat<R>(co), R(0.0)} * pw;
    pw = pw * zeta;
  }
  return acc;
}

template <typename R>
std::vector<Cx<R>> poly_to_cx(const Polynomial& p) {
  std::vector<Cx<R>> out(size_t(p.degree() + 1));
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff_to_cx<R>(p.coeff(i));
  return out;
}

template <typename R>
Cx<R> promote(std::complex<double> z) {
  return {R(z.real()), R(z.imag())};
}

std::complex<double> demote(const Cx<double>& z) { return {z.re, z.im}; }
std::complex<double> demote(const Cx<DD>& z) {
  return {z.re.to_double(), z.im.to_double()};
}

template <typename R>
double tracking_eps();
template <>
double tracking_eps<double>() {
  return 1e-12;
}
template <>
double tracking_eps<DD>() {
  return 1e-26;
}

// ---------------------------------------------------------------------------
// Exact critical data.
// ---------------------------------------------------------------------------

// (A(infinity), local degree of the map at the point at infinity), when that
// value is finite; nullopt for maps with deg num > deg den.
std::optional<std::pair<Coeff, long>> value_at_infinity(
    const RationalFunction& a) {
  const Polynomial& n = a.num();
  const Polynomial& d = a.den();
  if (n.degree() > d.degree()) return std::nullopt;
  const Coeff cstar =
      n.degree() == d.degree() ? n.leading() / d.leading() : Coeff(0);
  const Polynomial e = n - d * cstar;
  const long t = d.degree() - e.degree();
  return std::make_pair(cstar, t);
}

// Multiset of root multiplicities of f, via the gcd chain
// R_1 = f, R_{k+1} = gcd(R_k, R_k'):  #(roots with mult >= k) is the degree
// drop from R_k to R_{k+1}.
std::vector<long> root_multiplicities(const Polynomial& f) {
  std::vector<long> degs;
  Polynomial r = f;
  while (r.degree() > 0) {
    degs.push_back(r.degree());
    r = poly_gcd(r, r.derivative());
  }
  degs.push_back(0);
  std::vector<long> out;
  for (size_t k = 1; k < degs.size(); ++k) {
    const long at_least_k = degs[k - 1] - degs[k];
    const long at_least_next = k < degs.size() - 1 ? degs[k] - degs[k + 1] : 0;
    for (long i = 0; i < at_least_k - at_least_next; ++i) out.push_back(long(k));
  }
  return out;
}

// Local degrees of A over the value infinity: pole multiplicities plus the
// contribution of the point at infinity when it maps there.  Sums to deg A.
std::vector<long> fiber_degrees_over_infinity(const RationalFunction& a) {
  std::vector<long> out = root_multiplicities(a.den());
  if (a.num().degree() > a.den().degree())
    out.push_back(long(a.num().degree() - a.den().degree()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Loop planning (always in double; the plan is shared across precisions).
// ---------------------------------------------------------------------------

struct LoopPlan {
  size_t branch_index = 0;
  double angle = 0.0;  // outgoing spoke direction at the base
  std::vector<std::complex<double>> waypoints;  // closed polyline
};

struct PathPlan {
  std::complex<double> base;
  std::vector<LoopPlan> loops;  // traversal order: ascending angle
};

double dist_point_segment(std::complex<double> p, std::complex<double> a,
                          std::complex<double> b) {
  const std::complex<double> ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() +
              (p.imag() - a.imag()) * ab.imag()) /
             len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double dist_segment_segment(std::complex<double> p1, std::complex<double> p2,
                            std::complex<double> q1, std::complex<double> q2) {
  return std::min(std::min(dist_point_segment(p1, q1, q2),
                           dist_point_segment(p2, q1, q2)),
                  std::min(dist_point_segment(q1, p1, p2),
                           dist_point_segment(q2, p1, p2)));
}

// Whether two segments can be certified disjoint.  Transversal crossings,
// collinear overlaps, and near-tangencies (where floating point cannot tell)
// all count as crossings; the planner then retries with another offset.
bool segments_may_cross(std::complex<double> p1, std::complex<double> p2,
                        std::complex<double> q1, std::complex<double> q2) {
  const auto cross = [](std::complex<double> u, std::complex<double> v) {
    return u.real() * v.imag() - u.imag() * v.real();
  };
  const double scale =
      std::max({std::abs(p2 - p1), std::abs(q2 - q1), 1e-300});
  const double tiny = 1e-12 * scale * scale;
  const double d1 = cross(q2 - q1, p1 - q1);
  const double d2 = cross(q2 - q1, p2 - q1);
  const double d3 = cross(p2 - p1, q1 - p1);
  const double d4 = cross(p2 - p1, q2 - p1);
  if (std::abs(d1) < tiny && std::abs(d2) < tiny && std::abs(d3) < tiny &&
      std::abs(d4) < tiny) {
    // Collinear: crossing iff the projections onto the common line overlap.
    const std::complex<double> dir = p2 - p1;
    const auto proj = [&](std::complex<double> z) {
      return z.real() * dir.real() + z.imag() * dir.imag();
    };
    const double a0 = std::min(proj(p1), proj(p2));
    const double a1 = std::max(proj(p1), proj(p2));
    const double b0 = std::min(proj(q1), proj(q2));
    const double b1 = std::max(proj(q1), proj(q2));
    return a1 >= b0 && b1 >= a0;
  }
  if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return true;
  return dist_segment_segment(p1, p2, q1, q2) < 1e-7 * scale;
}

// Loops around each branch point from a common base, routed over a hub
// circle that encloses the whole configuration: leave the base for the hub,
// sweep along the hub counterclockwise to the branch point's angle, descend
// straight to a small entry circle, walk that circle counterclockwise, and
// retrace the way home.  Retracing makes each loop conjugation-free.  The
// loops form a standard generator system — their composite, taken in
// descending order of swept hub angle, contracts to one counterclockwise
// turn of the hub circle — provided the descents are pairwise disjoint and
// stay outside every other loop's entry circle.  Both conditions are
// enforced here by construction: descents keep a margin outside foreign
// entry disks, and each new descent is checked against all previously
// planned ones, retrying with perturbed hub angles until the whole system
// embeds without crossings.  Descents are planned longest first (innermost
// branch point first), since those pass the most obstacles.
PathPlan plan_loops(const std::vector<std::complex<double>>& branch,
                    const std::vector<std::complex<double>>& avoid,
                    std::optional<std::complex<double>> forced_base) {
  const size_t k = branch.size();

  double rmax = 0.0;
  for (const auto& p : branch) rmax = std::max(rmax, std::abs(p));
  for (const auto& p : avoid) rmax = std::max(rmax, std::abs(p));
  const double hub = 2.0 * rmax + 1.0;

  std::vector<double> radius(k);
  for (size_t j = 0; j < k; ++j) {
    double r = 0.25 * (hub - std::abs(branch[j]));
    for (size_t i = 0; i < k; ++i)
      if (i != j) r = std::min(r, 0.4 * std::abs(branch[i] - branch[j]));
    for (const auto& av : avoid)
      r = std::min(r, 0.4 * std::abs(av - branch[j]));
    radius[j] = r;
  }
  std::vector<double> avoid_radius(avoid.size());
  for (size_t t = 0; t < avoid.size(); ++t) {
    double r = 1.0;
    for (size_t i = 0; i < k; ++i)
      r = std::min(r, 0.4 * std::abs(branch[i] - avoid[t]));
    avoid_radius[t] = r;
  }

  // A segment is admissible when it stays strictly outside every foreign
  // entry disk (margin 1.05, so it cannot thread another loop's circle) and
  // clear of the avoid disks; `skip` exempts the target branch disk during
  // the final descent.
  auto segment_clear = [&](std::complex<double> u, std::complex<double> v,
                           size_t skip) {
    for (size_t i = 0; i < k; ++i)
      if (i != skip &&
          dist_point_segment(branch[i], u, v) < 1.05 * radius[i])
        return false;
    for (size_t t = 0; t < avoid.size(); ++t)
      if (dist_point_segment(avoid[t], u, v) < 0.9 * avoid_radius[t])
        return false;
    return true;
  };

  // Base and hub attachment point.  An automatic base sits on the hub at the
  // most open of 64 angles; a caller base connects to the hub by the
  // clearest straight segment.
  std::complex<double> base;
  double hub_angle = 0.0;
  if (forced_base) {
    base = *forced_base;
    for (size_t t = 0; t < avoid.size(); ++t)
      avoid_radius[t] =
          std::min(avoid_radius[t], 0.45 * std::abs(avoid[t] - base));
    for (size_t j = 0; j < k; ++j)
      radius[j] = std::min(radius[j], 0.25 * std::abs(branch[j] - base));
    bool found = false;
    double best = -1.0;
    for (int t = 0; t < 64; ++t) {
      const double ang = 2.0 * M_PI * double(t) / 64.0 + 0.03;
      const std::complex<double> cand = std::polar(hub, ang);
      if (!segment_clear(base, cand, k)) continue;
      double clear = 1e300;
      for (const auto& p : branch) clear = std::min(clear, std::abs(cand - p));
      if (clear > best) {
        best = clear;
        hub_angle = ang;
        found = true;
      }
    }
    if (!found)
      throw precision_error("could not connect the base point to a hub path");
  } else {
    double best = -1.0;
    for (int t = 0; t < 64; ++t) {
      const double ang = 2.0 * M_PI * double(t) / 64.0 + 0.03;
      const std::complex<double> cand = std::polar(hub, ang);
      double clear = 1e300;
      for (const auto& p : branch) clear = std::min(clear, std::abs(cand - p));
      for (const auto& p : avoid) clear = std::min(clear, std::abs(cand - p));
      if (clear > best) {
        best = clear;
        hub_angle = ang;
      }
    }
    base = std::polar(hub, hub_angle);
  }
  const std::complex<double> hub_home = std::polar(hub, hub_angle);

  static const double kOffsets[] = {0.0,   0.05,  -0.05, 0.11, -0.11, 0.19,
                                    -0.19, 0.29,  -0.29, 0.42, -0.42, 0.58,
                                    -0.58, 0.8,   -0.8,  1.1,  -1.1};

  // Segments every new descent must avoid: previously planned descents,
  // plus the base-to-hub connection when the base sits off the hub.
  std::vector<std::pair<std::complex<double>, std::complex<double>>> taken;
  if (std::abs(base - std::polar(hub, hub_angle)) > 1e-12)
    taken.push_back({base, std::polar(hub, hub_angle)});

  // Longest descents (innermost branch points) are the most constrained, so
  // plan them first.
  std::vector<size_t> order(k);
  for (size_t j = 0; j < k; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const double ra = std::abs(branch[a]), rb = std::abs(branch[b]);
    if (ra != rb) return ra < rb;
    return a < b;
  });

  PathPlan plan;
  plan.base = base;
  for (size_t j : order) {
    bool routed = false;
    for (const double off : kOffsets) {
      // Swept hub angle for this loop; keep it strictly inside one turn so
      // the loop never crosses the cut ray at the base.
      const double raw = std::arg(branch[j]) + off - hub_angle;
      const double sweep = raw - 2.0 * M_PI * std::floor(raw / (2.0 * M_PI));
      if (sweep < 0.02 || sweep > 2.0 * M_PI - 0.02) continue;
      const std::complex<double> hub_pt = std::polar(hub, hub_angle + sweep);
      const std::complex<double> toward = hub_pt - branch[j];
      const std::complex<double> entry =
          branch[j] + radius[j] * toward / std::abs(toward);
      if (!segment_clear(hub_pt, entry, j)) continue;
      bool crosses = false;
      for (const auto& [u, v] : taken)
        if (segments_may_cross(hub_pt, entry, u, v)) {
          crosses = true;
          break;
        }
      if (crosses) continue;
      taken.push_back({hub_pt, entry});

      LoopPlan loop;
      loop.branch_index = j;
      loop.angle = sweep;
      auto& wp = loop.waypoints;
      wp.push_back(base);
      if (std::abs(base - hub_home) > 1e-12) wp.push_back(hub_home);
      const int arc_steps = std::max(1, int(std::ceil(sweep / (M_PI / 12.0))));
      for (int t = 1; t <= arc_steps; ++t)
        wp.push_back(
            std::polar(hub, hub_angle + sweep * double(t) / arc_steps));
      wp.push_back(entry);
      for (int t = 1; t <= 24; ++t) {
        const std::complex<double> rot =
            std::polar(1.0, 2.0 * M_PI * double(t) / 24.0);
        wp.push_back(branch[j] + (entry - branch[j]) * rot);
      }
      // Retrace: hub point, arc home, base.
      for (int t = arc_steps; t >= 1; --t)
        wp.push_back(
            std::polar(hub, hub_angle + sweep * double(t) / arc_steps));
      if (std::abs(base - hub_home) > 1e-12) wp.push_back(hub_home);
      wp.push_back(base);
      plan.loops.push_back(std::move(loop));
      routed = true;
      break;
    }
    if (!routed)
      throw precision_error(
          "could not route a clear loop around a branch point");
  }
  std::sort(plan.loops.begin(), plan.loops.end(),
            [](const LoopPlan& a, const LoopPlan& b) {
              if (a.angle != b.angle) return a.angle < b.angle;
              return a.branch_index < b.branch_index;
            });
  return plan;
}

// ---------------------------------------------------------------------------
// Fiber tracking.
// ---------------------------------------------------------------------------

// Pencil of fibers F_w(x) = lo(x) + w * lin(x); both internal runs (value
// plane moved by a Mobius change of parameter) and direct runs fit this
// shape.
template <typename R>
struct FiberPencil {
  std::vector<Cx<R>> lo;
  std::vector<Cx<R>> lin;

  std::vector<Cx<R>> at(const Cx<R>& w) const {
    const size_t n = std::max(lo.size(), lin.size());
    std::vector<Cx<R>> out(n);
    for (size_t i = 0; i < n; ++i) {
      Cx<R> v{};
      if (i < lo.size()) v = lo[i];
      if (i < lin.size()) v = v + w * lin[i];
      out[i] = v;
    }
    return out;
  }
};

template <typename R>
bool newton_root(const std::vector<Cx<R>>& poly, Cx<R>& x, double tol) {
  for (int it = 0; it < 40; ++it) {
    const auto [v, d] = numeric::poly_eval_deriv(poly, x);
    if (std::abs(demote(d)) == 0.0) return false;
    const Cx<R> step = v / d;
    x = x - step;
    const double sn = std::abs(demote(step));
    if (sn <= tol * std::max(1.0, std::abs(demote(x)))) return true;
  }
  return false;
}

double min_separation(const std::vector<std::complex<double>>& pts) {
  double sep = 1e300;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      sep = std::min(sep, std::abs(pts[i] - pts[j]));
  return sep;
}

template <typename R>
std::vector<std::complex<double>> demote_all(const std::vector<Cx<R>>& xs) {
  std::vector<std::complex<double>> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) out[i] = demote(xs[i]);
  return out;
}

// Continue all sheets from w0 to w1, adaptively: a step is accepted only when
// every sheet's Newton iteration converges, no sheet moves further than a
// fraction of the current sheet separation (so nearest-point matching cannot
// swap sheets), and the separation does not collapse.
template <typename R>
bool track_segment(const FiberPencil<R>& pencil, std::complex<double> w0,
                   std::complex<double> w1, std::vector<Cx<R>>& xs,
                   double tol) {
  double t = 0.0;
  double h = 0.25;
  int steps = 0;
  while (t < 1.0 - 1e-12) {
    if (++steps > 20000) return false;
    const double t2 = std::min(1.0, t + h);
    const std::complex<double> w = w0 + (w1 - w0) * t2;
    const std::vector<Cx<R>> poly = pencil.at(promote<R>(w));

    const std::vector<std::complex<double>> old_pos = demote_all(xs);
    const double old_sep = min_separation(old_pos);
    std::vector<Cx<R>> cand = xs;
    bool ok = true;
    for (size_t i = 0; ok && i < cand.size(); ++i) {
      ok = newton_root(poly, cand[i], tol);
      if (ok) ok = std::abs(demote(cand[i]) - old_pos[i]) <= 0.35 * old_sep;
    }
    if (ok) ok = min_separation(demote_all(cand)) >= 0.3 * old_sep;
    if (!ok) {
      h *= 0.5;
      if (h < 1e-6) return false;
      continue;
    }
    xs = std::move(cand);
    t = t2;
    h = std::min(0.25, h * 1.7);
  }
  return true;
}

// One full loop; returns the permutation matching the transported fiber back
// to the base fiber (sheet i ends on base root perm[i]).
template <typename R>
std::optional<Permutation> track_loop(const FiberPencil<R>& pencil,
                                      const LoopPlan& loop,
                                      const std::vector<Cx<R>>& base_roots,
                                      double tol) {
  std::vector<Cx<R>> xs = base_roots;
  for (size_t s = 0; s + 1 < loop.waypoints.size(); ++s)
    if (!track_segment(pencil, loop.waypoints[s], loop.waypoints[s + 1], xs,
                       tol))
      return std::nullopt;

  const std::vector<std::complex<double>> fin = demote_all(xs);
  const std::vector<std::complex<double>> home = demote_all(base_roots);
  const double home_sep = min_separation(home);
  const size_t n = home.size();
  Permutation perm(n, size_t(n));
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < n; ++i) {
    size_t best = n;
    double bd = 1e300;
    for (size_t j = 0; j < n; ++j) {
      const double d = std::abs(fin[i] - home[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (best == n || bd > 0.25 * home_sep || used[best]) return std::nullopt;
    used[best] = true;
    perm[i] = best;
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Permutation helpers.
// ---------------------------------------------------------------------------

Permutation compose_perm(const Permutation& after, const Permutation& first) {
  Permutation r(first.size());
  for (size_t i = 0; i < first.size(); ++i) r[i] = after[first[i]];
  return r;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

bool is_identity(const Permutation& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

size_t cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  size_t c = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

std::vector<long> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<long> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// System runs.
// ---------------------------------------------------------------------------

// A joint tracking problem: one or two fiber pencils over a common parameter
// plane, a branch set (all parameter-plane branch points of every pencil),
// and numerically delicate points to stay away from.
struct SystemSpec {
  Polynomial a_lo, a_lin;  // pencil A: a_lo + w * a_lin
  Polynomial b_lo, b_lin;  // pencil B; empty (degree < 0) when absent
  size_t deg_a = 0;
  size_t deg_b = 0;
  std::vector<std::complex<double>> branch;
  std::vector<std::complex<double>> avoid;
  std::optional<std::complex<double>> forced_base;
};

struct RawRun {
  std::vector<Permutation> perms_a;  // aligned with spec.branch
  std::vector<Permutation> perms_b;
  double eps = 0.0;
};

template <typename R>
std::optional<std::vector<Cx<R>>> base_fiber(const FiberPencil<double>& seed,
                                             const FiberPencil<R>& pencil,
                                             std::complex<double> base,
                                             size_t expect, double tol) {
  std::vector<std::complex<double>> cd;
  for (const Cx<double>& c : seed.at(promote<double>(base)))
    cd.push_back(demote(c));
  std::vector<std::complex<double>> roots;
  try {
    roots = numeric::all_roots(cd);
  } catch (const error&) {
    return std::nullopt;
  }
  if (roots.size() != expect) return std::nullopt;

  std::vector<Cx<R>> out;
  const std::vector<Cx<R>> poly = pencil.at(promote<R>(base));
  for (const auto& r : roots) {
    Cx<R> x = promote<R>(r);
    if (!newton_root(poly, x, tol)) return std::nullopt;
    out.push_back(x);
  }
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  if (min_separation(demote_all(out)) < 1e-10 * scale) return std::nullopt;
  return out;
}

template <typename R>
std::optional<RawRun> attempt_run(const SystemSpec& spec,
                                  const PathPlan& plan) {
  const double tol = tracking_eps<R>();
  const FiberPencil<double> seed_a{poly_to_cx<double>(spec.a_lo),
                                   poly_to_cx<double>(spec.a_lin)};
  const FiberPencil<R> pen_a{poly_to_cx<R>(spec.a_lo),
                             poly_to_cx<R>(spec.a_lin)};
  const auto base_a =
      base_fiber<R>(seed_a, pen_a, plan.base, spec.deg_a, tol);
  if (!base_a) return std::nullopt;

  RawRun run;
  run.eps = tol;
  run.perms_a.assign(spec.branch.size(), {});
  for (const LoopPlan& loop : plan.loops) {
    const auto p = track_loop(pen_a, loop, *base_a, tol);
    if (!p) return std::nullopt;
    run.perms_a[loop.branch_index] = *p;
  }

  if (spec.deg_b > 0) {
    const FiberPencil<double> seed_b{poly_to_cx<double>(spec.b_lo),
                                     poly_to_cx<double>(spec.b_lin)};
    const FiberPencil<R> pen_b{poly_to_cx<R>(spec.b_lo),
                               poly_to_cx<R>(spec.b_lin)};
    const auto base_b =
        base_fiber<R>(seed_b, pen_b, plan.base, spec.deg_b, tol);
    if (!base_b) return std::nullopt;
    run.perms_b.assign(spec.branch.size(), {});
    for (const LoopPlan& loop : plan.loops) {
      const auto p = track_loop(pen_b, loop, *base_b, tol);
      if (!p) return std::nullopt;
      run.perms_b[loop.branch_index] = *p;
    }
  }
  return run;
}

// Ordered product of the loop permutations in traversal order (first loop
// applied first).
Permutation traversal_product(const std::vector<Permutation>& by_branch,
                              const PathPlan& plan, size_t n) {
  // The composite of the loops, taken in descending hub-sweep order, is
  // homotopic to one counterclockwise turn of the hub circle enclosing every
  // branch point.  With continuation composing on the left, that reads as a
  // fold over the planned loops in reverse.
  Permutation prod(n);
  for (size_t i = 0; i < n; ++i) prod[i] = i;
  for (auto it = plan.loops.rbegin(); it != plan.loops.rend(); ++it)
    prod = compose_perm(by_branch[it->branch_index], prod);
  return prod;
}

// Total branching defect; must equal 2*deg - 2 over the full branch set of a
// degree-deg map of the sphere.
long total_defect(const std::vector<Permutation>& perms, size_t n) {
  long d = 0;
  for (const Permutation& p : perms) d += long(n) - long(cycle_count(p));
  return d;
}

std::vector<int> precision_ladder(Precision p) {
  switch (p) {
    case Precision::double_only:
      return {0};
    case Precision::double_double:
      return {1};
    case Precision::automatic:
    default:
      return {0, 1};
  }
}

// ---------------------------------------------------------------------------
// Orbits and genus.
// ---------------------------------------------------------------------------

struct DisjointSets {
  std::vector<size_t> parent;
  explicit DisjointSets(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// Orbits of the joint action s.(i, j) = (sigma_s(i), tau_s(j)) on sheet
// pairs, listed with pairs ascending and orbits ordered by first pair.
std::vector<std::vector<std::pair<size_t, size_t>>> joint_orbits(
    const std::vector<Permutation>& pa, const std::vector<Permutation>& pb,
    size_t na, size_t nb) {
  DisjointSets dsu(na * nb);
  for (size_t s = 0; s < pa.size(); ++s)
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < nb; ++j)
        dsu.unite(i * nb + j, pa[s][i] * nb + pb[s][j]);
  std::map<size_t, std::vector<std::pair<size_t, size_t>>> buckets;
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      buckets[dsu.find(i * nb + j)].push_back({i, j});
  std::vector<std::vector<std::pair<size_t, size_t>>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// Genus of one orbit from the Riemann-Hurwitz count over the sphere:
// 2g - 2 = -2|O| + sum over branch points of (|O| - #cycles of the joint
// permutation restricted to O).  Fails (returns false) when the count is not
// an even nonnegative total.
bool orbit_genus(const std::vector<std::pair<size_t, size_t>>& orbit,
                 const std::vector<Permutation>& pa,
                 const std::vector<Permutation>& pb, size_t nb, long* genus) {
  std::map<size_t, size_t> pos;
  for (size_t t = 0; t < orbit.size(); ++t)
    pos[orbit[t].first * nb + orbit[t].second] = t;
  long defect = 0;
  for (size_t s = 0; s < pa.size(); ++s) {
    std::vector<bool> seen(orbit.size(), false);
    long cycles = 0;
    for (size_t t = 0; t < orbit.size(); ++t) {
      if (seen[t]) continue;
      ++cycles;
      size_t u = t;
      while (!seen[u]) {
        seen[u] = true;
        const auto [i, j] = orbit[u];
        u = pos.at(pa[s][i] * nb + pb[s][j]);
      }
    }
    defect += long(orbit.size()) - cycles;
  }
  const long two_g = 2 - 2 * long(orbit.size()) + defect;
  if (two_g % 2 != 0 || two_g < 0) return false;
  *genus = two_g / 2;
  return true;
}

// ---------------------------------------------------------------------------
// Pair systems in a normalized parameter plane.
// ---------------------------------------------------------------------------

// Joint setup for A and B over the value sphere, after the parameter change
// w = 1/(c - q) for a rational regular value q: every branch value becomes a
// finite w (the value infinity lands at w = 0), and w = infinity is
// unbranched, so the ordered product of all loop permutations must cancel
// exactly.
struct PairSetup {
  SystemSpec spec;
  std::vector<std::complex<double>> c_branch;  // finite branch values
  bool has_infinity = false;                   // value infinity branches
  Coeff q;
  std::complex<double> base_c;  // filled after planning
};

PairSetup make_pair_setup(const RationalFunction& a, const RationalFunction& b) {
  const CriticalValues cva = critical_values(a);
  const CriticalValues cvb = critical_values(b);
  Polynomial merged = squarefree_part(cva.locus * cvb.locus);
  if (merged.degree() < 1)
    throw error("internal: a degree >= 2 map must have finite branch values");

  const auto via = value_at_infinity(a);
  const auto vib = value_at_infinity(b);
  Coeff q;
  for (long v = 0;; v = v > 0 ? -v : -v + 1) {
    const Coeff c(v);
    if (merged.eval(c) == Coeff(0)) continue;
    if (via && via->first == c) continue;
    if (vib && vib->first == c) continue;
    q = c;
    break;
  }

  std::vector<std::complex<double>> c_roots;
  {
    std::vector<std::complex<double>> cc(size_t(merged.degree() + 1));
    for (size_t i = 0; i < cc.size(); ++i) cc[i] = merged.coeff(i).to_complex();
    c_roots = numeric::all_roots(cc);
  }
  const std::complex<double> qc = q.to_complex();

  PairSetup setup;
  setup.q = q;
  setup.c_branch = c_roots;
  setup.has_infinity = cva.infinity_branch || cvb.infinity_branch;

  SystemSpec& spec = setup.spec;
  for (const auto& c : c_roots) spec.branch.push_back(1.0 / (c - qc));
  if (setup.has_infinity) spec.branch.push_back(0.0);

  double scale = 1.0;
  for (const auto& w : spec.branch) scale = std::max(scale, std::abs(w));
  if (min_separation(spec.branch) < 1e-9 * scale)
    throw precision_error("branch values are too close to separate");

  for (const auto& vi : {via, vib}) {
    if (!vi) continue;
    if (merged.eval(vi->first) == Coeff(0)) continue;  // already a branch value
    spec.avoid.push_back(1.0 / (vi->first.to_complex() - qc));
  }

  spec.a_lo = -a.den();
  spec.a_lin = a.num() - a.den() * q;
  spec.b_lo = -b.den();
  spec.b_lin = b.num() - b.den() * q;
  spec.deg_a = size_t(a.degree());
  spec.deg_b = size_t(b.degree());
  return setup;
}

bool certify_pair(const RawRun& run, const SystemSpec& spec,
                  const PathPlan& plan) {
  if (!is_identity(traversal_product(run.perms_a, plan, spec.deg_a)))
    return false;
  if (!is_identity(traversal_product(run.perms_b, plan, spec.deg_b)))
    return false;
  if (total_defect(run.perms_a, spec.deg_a) != 2 * long(spec.deg_a) - 2)
    return false;
  if (total_defect(run.perms_b, spec.deg_b) != 2 * long(spec.deg_b) - 2)
    return false;
  return true;
}

std::optional<FiberDecomposition> pair_attempt(const PairSetup& setup,
                                               const PathPlan& plan,
                                               int level) {
  const SystemSpec& spec = setup.spec;
  const auto raw = level == 0 ? attempt_run<double>(spec, plan)
                              : attempt_run<DD>(spec, plan);
  if (!raw) return std::nullopt;
  if (!certify_pair(*raw, spec, plan)) return std::nullopt;

  const auto orbits =
      joint_orbits(raw->perms_a, raw->perms_b, spec.deg_a, spec.deg_b);
  std::vector<CurveComponent> comps;
  for (const auto& orbit : orbits) {
    long genus = 0;
    if (!orbit_genus(orbit, raw->perms_a, raw->perms_b, spec.deg_b, &genus))
      return std::nullopt;
    comps.push_back({orbit, long(orbit.size()), genus});
  }

  FiberDecomposition fd;
  fd.system.branch_points = setup.c_branch;
  fd.system.infinity_marker = setup.has_infinity;
  fd.system.perms_a = raw->perms_a;
  fd.system.perms_b = raw->perms_b;
  for (const LoopPlan& loop : plan.loops)
    fd.system.traversal.push_back(loop.branch_index);
  const std::complex<double> wb = plan.base;
  fd.system.base_point = setup.q.to_complex() + 1.0 / wb;
  fd.system.precision = raw->eps;
  fd.components = std::move(comps);
  return fd;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

CriticalValues critical_values(const RationalFunction& a) {
  if (a.degree() < 2)
    throw invalid_input_error("critical values need degree at least 2");
  const Polynomial& n = a.num();
  const Polynomial& d = a.den();
  const Polynomial wron = n.derivative() * d - n * d.derivative();
  const auto vi = value_at_infinity(a);

  // Finite critical points: eliminate x between the derivative numerator and
  // the fiber polynomial, by exact resultants at sample values of the fiber
  // parameter followed by interpolation.  Samples where the fiber polynomial
  // drops degree (the value of the map at infinity) would mix formulas of
  // different degrees and are skipped.
  Polynomial locus = Polynomial::one();
  const int bound = wron.degree();
  if (bound > 0) {
    std::vector<std::pair<Coeff, Coeff>> samples;
    for (long v = 0; long(samples.size()) < long(bound) + 1;
         v = v > 0 ? -v : -v + 1) {
      const Coeff c(v);
      if (vi && vi->first == c) continue;
      samples.push_back({c, resultant(wron, n - d * c)});
    }
    const Polynomial interp = interpolate(samples);
    if (interp.is_zero())
      throw error("internal: critical value locus cannot vanish identically");
    if (!interp.is_constant()) locus = squarefree_part(interp);
  }

  // A critical point sitting at infinity with a finite value adds that value.
  if (vi && vi->second >= 2 && !(locus.eval(vi->first) == Coeff(0)))
    locus = locus * Polynomial{-vi->first, Coeff(1)};

  CriticalValues out;
  out.locus = locus;
  if (locus.degree() > 0) {
    std::vector<std::complex<double>> cc(size_t(locus.degree() + 1));
    for (size_t i = 0; i < cc.size(); ++i) cc[i] = locus.coeff(i).to_complex();
    out.values = numeric::all_roots(cc);
  }
  for (long m : fiber_degrees_over_infinity(a))
    if (m >= 2) out.infinity_branch = true;
  return out;
}

std::vector<Permutation> monodromy(
    const RationalFunction& a,
    const std::vector<std::complex<double>>& branch_set,
    std::complex<double> base, Precision precision) {
  if (a.degree() < 2)
    throw invalid_input_error("monodromy needs degree at least 2");
  if (branch_set.empty())
    throw invalid_input_error("monodromy needs a nonempty branch set");
  double scale = std::max(1.0, std::abs(base));
  for (const auto& s : branch_set) scale = std::max(scale, std::abs(s));
  for (const auto& s : branch_set)
    if (std::abs(base - s) < 1e-9 * scale)
      throw invalid_input_error("base point lies in the branch set");
  if (branch_set.size() > 1 && min_separation(branch_set) < 1e-12 * scale)
    throw invalid_input_error("branch set entries must be distinct");

  SystemSpec spec;
  spec.a_lo = a.num();
  spec.a_lin = -a.den();  // fiber over c: num - c * den
  spec.deg_a = size_t(a.degree());
  spec.branch = branch_set;
  spec.forced_base = base;
  if (const auto vi = value_at_infinity(a)) {
    const std::complex<double> cstar = vi->first.to_complex();
    bool listed = false;
    for (const auto& s : branch_set)
      if (std::abs(s - cstar) < 1e-9 * scale) listed = true;
    if (std::abs(base - cstar) < 1e-9 * scale)
      throw invalid_input_error("fiber over the base point is degenerate");
    if (!listed) spec.avoid.push_back(cstar);
  }

  const PathPlan plan = plan_loops(spec.branch, spec.avoid, base);
  const std::vector<long> inf_type = fiber_degrees_over_infinity(a);

  for (int level : precision_ladder(precision)) {
    const auto raw = level == 0 ? attempt_run<double>(spec, plan)
                                : attempt_run<DD>(spec, plan);
    if (!raw) continue;
    // The composite of all loops is a loop around everything, whose inverse
    // is the monodromy at infinity; its cycle type is known exactly, and the
    // Riemann-Hurwitz count over the full branch set must close.
    const Permutation around_inf =
        inverse_perm(traversal_product(raw->perms_a, plan, spec.deg_a));
    if (cycle_type(around_inf) != inf_type) continue;
    if (total_defect(raw->perms_a, spec.deg_a) +
            (long(spec.deg_a) - long(cycle_count(around_inf))) !=
        2 * long(spec.deg_a) - 2)
      continue;
    return raw->perms_a;
  }
  throw precision_error("monodromy failed to certify at maximum precision");
}

FiberDecomposition fiber_decomposition(const RationalFunction& a,
                                       const RationalFunction& b,
                                       Precision precision) {
  if (a.degree() < 2 || b.degree() < 2)
    throw invalid_input_error("fiber components need degree at least 2");
  const PairSetup setup = make_pair_setup(a, b);
  const PathPlan plan =
      plan_loops(setup.spec.branch, setup.spec.avoid, std::nullopt);
  for (int level : precision_ladder(precision)) {
    if (auto fd = pair_attempt(setup, plan, level)) return *fd;
  }
  throw precision_error(
      "fiber decomposition failed to certify at maximum precision");
}

std::vector<CurveComponent> fiber_components(const RationalFunction& a,
                                             const RationalFunction& b) {
  return fiber_decomposition(a, b).components;
}

TameReport tame_check(const RationalFunction& a, Precision precision) {
  const FiberDecomposition fd = fiber_decomposition(a, a, precision);
  const size_t n = size_t(a.degree());
  TameReport report;
  bool removed = false;
  for (const CurveComponent& comp : fd.components) {
    bool has_diag = false;
    for (const auto& [i, j] : comp.orbit)
      if (i == j) has_diag = true;
    if (has_diag && !removed) {
      removed = true;
      // The removed orbit should be exactly the diagonal pairing; anything
      // else is an indexing anomaly worth surfacing.
      report.diagonal_clean = comp.orbit.size() == n;
      for (const auto& [i, j] : comp.orbit)
        if (i != j) report.diagonal_clean = false;
      continue;
    }
    report.components.push_back(comp);
  }
  for (const CurveComponent& comp : report.components)
    if (comp.genus <= 1) report.wild = true;
  return report;
}

std::vector<GenusScanCell> genus_scan(const RationalFunction& a,
                                      const RationalFunction& b, long n_max,
                                      long m_max, long fiber_cap) {
  if (a.degree() < 2 || b.degree() < 2)
    throw invalid_input_error("genus scan needs degree at least 2");
  if (n_max < 1 || m_max < 1 || fiber_cap < 1)
    throw invalid_input_error("genus scan bounds must be positive");

  std::vector<GenusScanCell> cells;
  for (long n = 1; n <= n_max; ++n) {
    for (long m = 1; m <= m_max; ++m) {
      GenusScanCell cell;
      cell.n = n;
      cell.m = m;
      long size = 1;
      for (long i = 0; i < n && size <= fiber_cap; ++i)
        size *= a.degree();
      for (long i = 0; i < m && size <= fiber_cap; ++i)
        size *= b.degree();
      if (size > fiber_cap) {
        cell.skipped = true;
      } else {
        const FiberDecomposition fd =
            fiber_decomposition(iterate(a, unsigned(n)), iterate(b, unsigned(m)));
        long best = fd.components.front().genus;
        for (const CurveComponent& c : fd.components)
          best = std::min(best, c.genus);
        cell.min_genus = best;
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace ratsemi
