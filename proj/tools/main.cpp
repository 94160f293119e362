// Command-line front end: every library operation behind one binary with
// machine-readable reports.
//
// Report envelope (JSON, keys sorted, stable across runs):
//   { "command": ..., "config": ..., "inputs": ..., "result": ...,
//     "tool": "ratsemi", "version": ... }
//
// Exit codes: 0 success (including negative verdicts), 2 searched within the
// configured bounds without finding a witness (or a configured cap cut the
// computation off), 3 numeric certification failed at maximum precision,
// 4 invalid input.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ratsemi/class_graph.hpp"
#include "ratsemi/commutant.hpp"
#include "ratsemi/decompose.hpp"
#include "ratsemi/dynamics.hpp"
#include "ratsemi/errors.hpp"
#include "ratsemi/io.hpp"
#include "ratsemi/monodromy.hpp"
#include "ratsemi/special.hpp"
#include "ratsemi/version.hpp"

using json = nlohmann::json;
using namespace ratsemi;

namespace {

struct RunConfig {
  long bound = 6;
  long degree_cap = kDefaultDegreeCap;
  std::string precision = "auto";
  long fiber_cap = kDefaultFiberCap;
  std::string format = "json";
  unsigned long seed = 0;
  long threads = 1;
  bool bound_given = false;

  json to_json() const {
    return json{{"bound", bound},         {"degree_cap", degree_cap},
                {"fiber_cap", fiber_cap}, {"format", format},
                {"precision", precision}, {"seed", seed},
                {"threads", threads}};
  }

  Precision precision_enum() const {
    if (precision == "auto") return Precision::automatic;
    if (precision == "double") return Precision::double_only;
    if (precision == "double-double") return Precision::double_double;
    throw invalid_input_error("unknown precision: " + precision);
  }
};

// Outcome of one subcommand: the `result` object plus the process exit code.
struct Outcome {
  json result;
  int code = 0;
  std::string text;        // human-readable summary for --format text
  std::string raw;         // non-JSON payload (DOT); printed verbatim
};

// Inline text, or the content of a file when the argument starts with '@'.
std::string load_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw invalid_input_error("cannot read file: " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RationalFunction load_function(const std::string& arg) {
  return read_function(load_text(arg));
}

Polynomial load_poly(const std::string& arg) {
  RationalFunction f = load_function(arg);
  if (!f.is_polynomial())
    throw invalid_input_error("expected a polynomial, got: " + f.str());
  return f.num();
}

Coeff load_coeff(const std::string& arg) {
  RationalFunction f = load_function(arg);
  if (!f.is_constant())
    throw invalid_input_error("expected a constant, got: " + f.str());
  auto v = f.eval(Coeff(0));
  if (!v) throw invalid_input_error("expected a finite constant: " + f.str());
  return *v;
}

json fn_json(const RationalFunction& f) {
  return json{{"canonical", function_to_json(f)}, {"text", f.str()}};
}

json mobius_json(const Mobius& mu) {
  return json{{"canonical", mobius_to_json(mu)}, {"text", mu.str()}};
}

// Doubles in reports are printed as shortest round-trip decimal strings so
// byte-identical reruns come for free.
std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_json(std::complex<double> z) {
  return json{{"im", decimal(z.imag())}, {"re", decimal(z.real())}};
}

json component_json(const CurveComponent& c) {
  json orbit = json::array();
  for (auto [i, j] : c.orbit) orbit.push_back(json::array({i, j}));
  return json{{"degree", c.degree}, {"genus", c.genus}, {"orbit", orbit}};
}

json system_json(const MonodromySystem& sys) {
  json branch = json::array();
  for (const auto& b : sys.branch_points) branch.push_back(complex_json(b));
  return json{{"base_point", complex_json(sys.base_point)},
              {"branch_points", branch},
              {"infinity_branch", sys.infinity_marker},
              {"permutations_a", sys.perms_a},
              {"permutations_b", sys.perms_b},
              {"precision", decimal(sys.precision)},
              {"traversal", sys.traversal}};
}

json decomposition_json(const DecompositionClass& c) {
  return json{{"left", fn_json(c.representative.left)},
              {"right", fn_json(c.representative.right)},
              {"trivial", c.trivial}};
}

json commutant_class_json(const CommutantClass& c) {
  json members = json::array();
  for (const auto& m : c.members) members.push_back(fn_json(m));
  return json{{"degree", c.class_degree},
              {"field_conductor", c.field_conductor},
              {"members", members},
              {"representative", fn_json(c.representative)}};
}

// ---------------------------------------------------------------------------
// Subcommand implementations.  Each fills inputs/result and returns the exit
// code through Outcome.
// ---------------------------------------------------------------------------

Outcome run_compose(const std::vector<std::string>& args,
                    const RunConfig& cfg, json& inputs) {
  RationalFunction f = load_function(args[0]), g = load_function(args[1]);
  inputs = {{"f", fn_json(f)}, {"g", fn_json(g)}};
  RationalFunction h = compose(f, g, cfg.degree_cap);
  Outcome out;
  out.result = {{"composition", fn_json(h)}, {"degree", h.degree()}};
  out.text = h.str();
  return out;
}

Outcome run_iterate(const std::vector<std::string>& args, const RunConfig& cfg,
                    json& inputs) {
  RationalFunction f = load_function(args[0]);
  long k = std::stol(args[1]);
  if (k < 1) throw invalid_input_error("iterate count must be >= 1");
  inputs = {{"f", fn_json(f)}, {"k", k}};
  RationalFunction h = iterate(f, unsigned(k), cfg.degree_cap);
  Outcome out;
  out.result = {{"degree", h.degree()}, {"iterate", fn_json(h)}};
  out.text = h.str();
  return out;
}

Outcome run_conjugate(const std::vector<std::string>& args,
                      const RunConfig& cfg, json& inputs) {
  RationalFunction f = load_function(args[0]);
  Mobius mu(load_coeff(args[1]), load_coeff(args[2]), load_coeff(args[3]),
            load_coeff(args[4]));
  inputs = {{"f", fn_json(f)}, {"mobius", mobius_json(mu)}};
  RationalFunction h = conjugate(f, mu, cfg.degree_cap);
  Outcome out;
  out.result = {{"conjugate", fn_json(h)}};
  out.text = h.str();
  return out;
}

Outcome run_chebyshev(const std::vector<std::string>& args, const RunConfig&,
                      json& inputs) {
  long n = std::stol(args[0]);
  if (n < 1) throw invalid_input_error("chebyshev index must be >= 1");
  inputs = {{"n", n}};
  Polynomial t = chebyshev(unsigned(n));
  Outcome out;
  out.result = {{"polynomial", fn_json(RationalFunction(t))}};
  out.text = t.str();
  return out;
}

Outcome run_special(const std::vector<std::string>& args, const RunConfig&,
                    json& inputs) {
  RationalFunction f = load_function(args[0]);
  inputs = {{"f", fn_json(f)}};
  SpecialnessReport rep = is_special(f);
  Outcome out;
  out.result = {{"kind", to_string(rep.kind)}};
  out.result["witness"] =
      rep.witness ? mobius_json(*rep.witness) : json(nullptr);
  out.text = to_string(rep.kind);
  return out;
}

Outcome run_decompose(const std::vector<std::string>& args, const RunConfig&,
                      json& inputs) {
  RationalFunction f = load_function(args[0]);
  inputs = {{"f", fn_json(f)}};
  auto classes = all_splittings(f);
  json list = json::array();
  for (const auto& c : classes) list.push_back(decomposition_json(c));
  Outcome out;
  out.result = {{"count", classes.size()}, {"splittings", list}};
  out.text = "splitting classes: " + std::to_string(classes.size());
  return out;
}

Outcome run_right_factor(const std::vector<std::string>& args,
                         const RunConfig&, json& inputs) {
  RationalFunction w = load_function(args[0]), b = load_function(args[1]);
  inputs = {{"b", fn_json(b)}, {"w", fn_json(w)}};
  auto q = right_factor_quotient(w, b);
  Outcome out;
  if (q) {
    out.result = {{"found", true}, {"quotient", fn_json(*q)}};
    out.text = q->str();
  } else {
    out.result = {{"found", false}};
    out.text = "no left factor: the input has no quotient through that map";
    out.code = 2;
  }
  return out;
}

Outcome run_gamma_graph(const std::vector<std::string>& args,
                        const RunConfig& cfg, json& inputs) {
  Polynomial p = load_poly(args[0]);
  inputs = {{"p", fn_json(RationalFunction(p))}};
  const size_t cap =
      cfg.bound_given ? size_t(cfg.bound) : size_t(kDefaultMaxVertices);
  ClassGraph g = build_class_graph(p, cap);
  Outcome out;
  if (cfg.format == "dot") {
    out.raw = to_dot(g);
    return out;
  }
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(fn_json(v));
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"from", e.from},
                         {"to", e.to},
                         {"witness", decomposition_json(e.witness)}});
  out.result = {{"basepoint", g.basepoint}, {"complete", g.complete},
                {"edges", edges}, {"vertices", vertices}};
  out.result["cycle_rank"] = g.complete ? json(betti_rank(g)) : json(nullptr);
  out.text = "vertices: " + std::to_string(g.vertices.size()) +
             ", edges: " + std::to_string(g.edges.size());
  if (g.complete)
    out.text += ", cycle rank: " + std::to_string(betti_rank(g));
  else {
    out.text += " (vertex cap reached)";
    out.code = 2;
  }
  return out;
}

Outcome run_aut(const std::vector<std::string>& args, const RunConfig&,
                json& inputs) {
  Polynomial p = load_poly(args[0]);
  inputs = {{"p", fn_json(RationalFunction(p))}};
  auto group = aut_group(p);
  json list = json::array();
  for (const auto& mu : group) list.push_back(mobius_json(mu));
  Outcome out;
  out.result = {{"elements", list}, {"order", group.size()}};
  out.text = "order " + std::to_string(group.size());
  return out;
}

Outcome run_commutant(const std::vector<std::string>& args,
                      const RunConfig& cfg, json& inputs) {
  Polynomial p = load_poly(args[0]);
  inputs = {{"max_degree", cfg.bound}, {"p", fn_json(RationalFunction(p))}};
  auto classes = commutant_enumerate(p, cfg.bound);
  json list = json::array();
  for (const auto& c : classes) list.push_back(commutant_class_json(c));
  Outcome out;
  out.result = {{"classes", list}, {"count", classes.size()}};
  out.text = "commutant classes up to degree " + std::to_string(cfg.bound) +
             ": " + std::to_string(classes.size());
  return out;
}

Outcome run_gp_table(const std::vector<std::string>& args,
                     const RunConfig& cfg, json& inputs) {
  Polynomial p = load_poly(args[0]);
  inputs = {{"l_max", cfg.bound}, {"max_degree", cfg.bound},
            {"p", fn_json(RationalFunction(p))}};
  GroupTable g = group_table(p, cfg.bound, cfg.bound);
  json elements = json::array();
  for (const auto& e : g.elements) elements.push_back(commutant_class_json(e));
  Outcome out;
  out.result = {{"complete", g.complete},
                {"elements", elements},
                {"identity_index", g.identity_index},
                {"metacyclic", g.metacyclic},
                {"order", g.elements.size()},
                {"table", g.table}};
  out.text = "group order " + std::to_string(g.elements.size()) +
             (g.complete ? "" : " (incomplete)");
  if (!g.complete) out.code = 2;
  return out;
}

Outcome run_class_equal(const std::vector<std::string>& args,
                        const RunConfig& cfg, json& inputs) {
  RationalFunction q1 = load_function(args[0]), q2 = load_function(args[1]),
                   p = load_function(args[2]);
  inputs = {{"l_max", cfg.bound}, {"p", fn_json(p)}, {"q1", fn_json(q1)},
            {"q2", fn_json(q2)}};
  ClassVerdict v = class_equal(q1, q2, p, cfg.bound);
  Outcome out;
  out.result = {{"bound_reached", v.bound_reached}, {"equal", v.equal}};
  out.text = v.equal ? "equal classes"
                     : (v.bound_reached ? "undecided within bound"
                                        : "distinct classes");
  if (!v.equal && v.bound_reached) out.code = 2;
  return out;
}

Outcome run_cinf(const std::vector<std::string>& args, const RunConfig& cfg,
                 json& inputs) {
  RationalFunction x = load_function(args[0]), p = load_function(args[1]);
  inputs = {{"p", fn_json(p)}, {"s_max", cfg.bound}, {"x", fn_json(x)}};
  auto s = cinf_membership(x, p, cfg.bound);
  Outcome out;
  if (s) {
    out.result = {{"member", true}, {"s", *s}};
    out.text = "commutes with iterate exponent " + std::to_string(*s);
  } else {
    out.result = {{"member", false}, {"s_max", cfg.bound}};
    out.text = "no commuting iterate up to exponent " +
               std::to_string(cfg.bound);
    out.code = 2;
  }
  return out;
}

Outcome run_sisis(const std::vector<std::string>& args, const RunConfig& cfg,
                  json& inputs, long k_flag, long l_flag) {
  RationalFunction x = load_function(args[0]), p = load_function(args[1]);
  inputs = {{"p", fn_json(p)}, {"x", fn_json(x)}};
  Outcome out;
  if (k_flag > 0 || l_flag > 0) {
    if (k_flag <= 0 || l_flag <= 0)
      throw invalid_input_error("sisis check needs both --k and --l");
    inputs["k"] = k_flag;
    inputs["l"] = l_flag;
    const bool ok = check_sisis(x, p, k_flag, l_flag);
    out.result = {{"holds", ok}};
    out.text = ok ? "system holds" : "system fails";
    return out;
  }
  inputs["bound"] = cfg.bound;
  auto w = search_sisis(x, p, cfg.bound);
  if (w) {
    out.result = {{"found", true}, {"k", w->k}, {"l", w->l}};
    out.text =
        "witness k=" + std::to_string(w->k) + " l=" + std::to_string(w->l);
  } else {
    out.result = {{"bound", cfg.bound}, {"found", false}};
    out.text = "no witness within bound " + std::to_string(cfg.bound);
    out.code = 2;
  }
  return out;
}

Outcome run_eq_system(const std::vector<std::string>& args, const RunConfig&,
                      json& inputs) {
  RationalFunction f = load_function(args[0]), g = load_function(args[1]);
  inputs = {{"f", fn_json(f)}, {"g", fn_json(g)}};
  const bool ok = check_eq_system(f, g);
  Outcome out;
  out.result = {{"holds", ok}};
  out.text = ok ? "system holds" : "system fails";
  return out;
}

Outcome run_fiber_pair(const std::vector<std::string>& args, const RunConfig&,
                       json& inputs) {
  RationalFunction a = load_function(args[0]), x = load_function(args[1]),
                   y = load_function(args[2]);
  inputs = {{"a", fn_json(a)}, {"x", fn_json(x)}, {"y", fn_json(y)}};
  auto [f, g] = build_from_fiber_pair(a, x, y);
  Outcome out;
  out.result = {{"f", fn_json(f)}, {"g", fn_json(g)}};
  out.text = "F = " + f.str() + "; G = " + g.str();
  return out;
}

Outcome run_even_construct(const std::vector<std::string>& args,
                           const RunConfig&, json& inputs) {
  RationalFunction u = load_function(args[0]);
  long d = std::stol(args[1]);
  inputs = {{"factor_degree", d}, {"u", fn_json(u)}};
  auto triples = even_construction(u, d);
  json list = json::array();
  for (const auto& t : triples)
    list.push_back(json{
        {"a", fn_json(t.a)}, {"x", fn_json(t.x)}, {"y", fn_json(t.y)}});
  Outcome out;
  out.result = {{"count", triples.size()}, {"triples", list}};
  out.text = "solution triples: " + std::to_string(triples.size());
  if (triples.empty()) out.code = 2;
  return out;
}

Outcome run_common_iterate(const std::vector<std::string>& args,
                           const RunConfig& cfg, json& inputs) {
  RationalFunction a = load_function(args[0]), b = load_function(args[1]);
  inputs = {{"a", fn_json(a)}, {"b", fn_json(b)}, {"bound", cfg.bound}};
  auto kl = common_iterate(a, b, cfg.bound);
  Outcome out;
  if (kl) {
    RationalFunction shared = iterate(a, unsigned(kl->first), cfg.degree_cap);
    out.result = {{"found", true},
                  {"k", kl->first},
                  {"l", kl->second},
                  {"shared_iterate", fn_json(shared)}};
    out.text = "A^" + std::to_string(kl->first) + " = B^" +
               std::to_string(kl->second);
  } else {
    out.result = {{"bound", cfg.bound}, {"found", false}};
    out.text = "no common iterate within bound " + std::to_string(cfg.bound);
    out.code = 2;
  }
  return out;
}

Outcome run_reversibility(const std::vector<std::string>& args,
                          const RunConfig& cfg, json& inputs) {
  RationalFunction a = load_function(args[0]), b = load_function(args[1]);
  inputs = {{"a", fn_json(a)}, {"b", fn_json(b)}, {"bound", cfg.bound}};
  auto kl = right_reversibility_equalities(a, b, cfg.bound);
  Outcome out;
  if (!kl) {
    out.result = {{"bound", cfg.bound}, {"found", false}};
    out.text = "no reversibility witness within bound " +
               std::to_string(cfg.bound);
    out.code = 2;
    return out;
  }
  const auto [k, l] = *kl;
  // Verified equalities: A^(2k) = A^k o B^l and B^(2l) = B^l o A^k.  The
  // first yields the right-side witness X o A = Y o B with X = A^(2k-1) and
  // Y = A^k o B^(l-1).
  const RationalFunction ak = iterate(a, unsigned(k), cfg.degree_cap);
  const RationalFunction bl = iterate(b, unsigned(l), cfg.degree_cap);
  ReversibilityWitness w{
      ReversibilitySide::right, iterate(a, unsigned(2 * k - 1), cfg.degree_cap),
      l > 1 ? compose(ak, iterate(b, unsigned(l - 1), cfg.degree_cap),
                      cfg.degree_cap)
            : ak};
  const bool ok = verify_reversibility(a, b, w);
  out.result = {{"equality_a", fn_json(iterate(a, unsigned(2 * k),
                                               cfg.degree_cap))},
                {"equality_b", fn_json(iterate(b, unsigned(2 * l),
                                               cfg.degree_cap))},
                {"found", true},
                {"k", k},
                {"l", l},
                {"witness_side", "right"},
                {"witness_verified", ok},
                {"witness_x", fn_json(w.x)},
                {"witness_y", fn_json(w.y)}};
  out.text = "k=" + std::to_string(k) + " l=" + std::to_string(l) +
             (ok ? ", right witness verified" : ", VERIFICATION FAILED");
  return out;
}

Outcome run_free_pair(const std::vector<std::string>& args,
                      const RunConfig& cfg, json& inputs) {
  RationalFunction a = load_function(args[0]), b = load_function(args[1]);
  inputs = {{"a", fn_json(a)}, {"b", fn_json(b)},
            {"word_length", cfg.bound}};
  auto rel = free_pair_certificate(a, b, cfg.bound);
  Outcome out;
  if (rel) {
    out.result = {{"relation", true},
                  {"value", fn_json(rel->value)},
                  {"word1", rel->word1},
                  {"word2", rel->word2}};
    out.text = "relation " + rel->word1 + " = " + rel->word2;
  } else {
    out.result = {{"relation", false}, {"word_length", cfg.bound}};
    out.text = "no relation up to word length " + std::to_string(cfg.bound) +
               " (pair plausibly free)";
    out.code = 2;
  }
  return out;
}

Outcome run_curve_components(const std::vector<std::string>& args,
                             const RunConfig& cfg, json& inputs) {
  RationalFunction a = load_function(args[0]), b = load_function(args[1]);
  inputs = {{"a", fn_json(a)}, {"b", fn_json(b)},
            {"precision", cfg.precision}};
  FiberDecomposition dec = fiber_decomposition(a, b, cfg.precision_enum());
  json comps = json::array();
  for (const auto& c : dec.components) comps.push_back(component_json(c));
  Outcome out;
  out.result = {{"components", comps},
                {"count", dec.components.size()},
                {"system", system_json(dec.system)}};
  std::ostringstream txt;
  txt << "components:";
  for (const auto& c : dec.components)
    txt << " (degree " << c.degree << ", genus " << c.genus << ")";
  out.text = txt.str();
  return out;
}

Outcome run_tame(const std::vector<std::string>& args, const RunConfig& cfg,
                 json& inputs) {
  RationalFunction a = load_function(args[0]);
  inputs = {{"a", fn_json(a)}, {"precision", cfg.precision}};
  TameReport rep = tame_check(a, cfg.precision_enum());
  json comps = json::array();
  json genera = json::array();
  for (const auto& c : rep.components) {
    comps.push_back(component_json(c));
    genera.push_back(c.genus);
  }
  Outcome out;
  out.result = {{"components", comps},
                {"diagonal_clean", rep.diagonal_clean},
                {"genera", genera},
                {"verdict", rep.wild ? "wild" : "tame"},
                {"wild", rep.wild}};
  std::ostringstream txt;
  txt << (rep.wild ? "wild" : "tame") << ", component genera [";
  for (size_t i = 0; i < rep.components.size(); ++i)
    txt << (i ? "," : "") << rep.components[i].genus;
  txt << "]";
  out.text = txt.str();
  return out;
}

Outcome run_genus_scan(const std::vector<std::string>& args,
                       const RunConfig& cfg, json& inputs) {
  RationalFunction a = load_function(args[0]), b = load_function(args[1]);
  inputs = {{"a", fn_json(a)}, {"b", fn_json(b)}, {"fiber_cap", cfg.fiber_cap},
            {"m_max", cfg.bound}, {"n_max", cfg.bound}};
  auto cells = genus_scan(a, b, cfg.bound, cfg.bound, cfg.fiber_cap);
  json list = json::array();
  for (const auto& c : cells) {
    json cell = {{"m", c.m}, {"n", c.n}, {"skipped", c.skipped}};
    if (!c.skipped) cell["min_genus"] = c.min_genus;
    list.push_back(cell);
  }
  Outcome out;
  out.result = {{"cells", list}};
  std::ostringstream txt;
  for (const auto& c : cells) {
    txt << "(" << c.n << "," << c.m << "): ";
    if (c.skipped)
      txt << "skipped";
    else
      txt << "min genus " << c.min_genus;
    txt << "\n";
  }
  out.text = txt.str();
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

void print_report(const std::string& command, const RunConfig& cfg,
                  const json& inputs, const Outcome& out) {
  if (!out.raw.empty()) {
    std::fputs(out.raw.c_str(), stdout);
    return;
  }
  if (cfg.format == "text") {
    std::printf("%s\n", out.text.c_str());
    return;
  }
  json report{{"command", command}, {"config", cfg.to_json()},
              {"inputs", inputs},   {"result", out.result},
              {"tool", kToolName},  {"version", kVersion}};
  std::printf("%s\n", report.dump(2).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational algebra for composition semigroups of rational "
               "functions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  long k_flag = 0, l_flag = 0;
  app.add_option("--bound", cfg.bound,
                 "search bound (iterate exponents, degrees, word lengths)")
      ->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", cfg.degree_cap,
                 "largest composition degree the run may build")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision,
                 "monodromy working precision: auto, double, double-double")
      ->check(CLI::IsMember({"auto", "double", "double-double"}));
  app.add_option("--fiber-cap", cfg.fiber_cap,
                 "largest sheet-pair count a scan cell may track")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format,
                 "output format: json, text, or dot (gamma-graph only)")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", cfg.seed,
                 "random seed echoed into reports (reserved for property "
                 "suites)");
  app.add_option("--threads", cfg.threads, "worker thread cap")
      ->check(CLI::PositiveNumber);

  // name, positional metavars, handler
  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;
  };
  const std::vector<Spec> specs = {
      {"compose", "compose two functions: F o G", {"F", "G"}},
      {"iterate", "k-fold self composition", {"F", "k"}},
      {"conjugate", "conjugate F by the map (a z + b)/(c z + d)",
       {"F", "a", "b", "c", "d"}},
      {"chebyshev", "Chebyshev polynomial T_n", {"n"}},
      {"special", "conjugacy class against power and Chebyshev maps", {"F"}},
      {"decompose", "all splitting classes F = V o U", {"F"}},
      {"right-factor", "quotient W = Y o B for given B", {"W", "B"}},
      {"gamma-graph", "elementary-transformation class graph", {"P"}},
      {"aut", "affine symmetries commuting with P", {"P"}},
      {"commutant", "commutant classes of P up to --bound", {"P"}},
      {"gp-table", "finite quotient group of the commutant", {"P"}},
      {"class-equal", "same commutant class test", {"Q1", "Q2", "P"}},
      {"cinf", "least iterate of P that X commutes with", {"X", "P"}},
      {"sisis", "semi-iterative system X^2k = X^k o P^l (--k/--l check, "
                "else search)",
       {"X", "P"}},
      {"eq-system", "pair system F o F = F o G, G o G = G o F", {"F", "G"}},
      {"fiber-pair", "build the pair system from A o X = A o Y",
       {"A", "X", "Y"}},
      {"even-construct", "solution triples of A o X = A o Y through U o z^2",
       {"U", "d"}},
      {"common-iterate", "least k, l with A^k = B^l", {"A", "B"}},
      {"reversibility", "reversibility witnesses from a shared iterate",
       {"A", "B"}},
      {"free-pair", "search for a composition word relation", {"A", "B"}},
      {"curve-components", "components of A(x) = B(y) with genera",
       {"A", "B"}},
      {"tame", "genus filter on the self product of A", {"A"}},
      {"genus-scan", "minimum component genus over iterate pairs",
       {"A", "B"}},
  };

  std::map<std::string, std::vector<std::string>> positional_values;
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    auto& store = positional_values[spec.name];
    store.resize(spec.positionals.size());
    for (size_t i = 0; i < spec.positionals.size(); ++i)
      sub->add_option(spec.positionals[i], store[i])->required();
    if (std::string(spec.name) == "sisis") {
      sub->add_option("--k", k_flag, "iterate exponent of X");
      sub->add_option("--l", l_flag, "iterate exponent of P");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }
  cfg.bound_given = app.count("--bound") > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  const std::vector<std::string>& args = positional_values[command];
  if (cfg.format == "dot" && command != "gamma-graph") {
    std::fprintf(stderr, "error: DOT output only exists for gamma-graph\n");
    return 4;
  }

  try {
    json inputs;
    Outcome out;
    if (command == "compose") out = run_compose(args, cfg, inputs);
    else if (command == "iterate") out = run_iterate(args, cfg, inputs);
    else if (command == "conjugate") out = run_conjugate(args, cfg, inputs);
    else if (command == "chebyshev") out = run_chebyshev(args, cfg, inputs);
    else if (command == "special") out = run_special(args, cfg, inputs);
    else if (command == "decompose") out = run_decompose(args, cfg, inputs);
    else if (command == "right-factor")
      out = run_right_factor(args, cfg, inputs);
    else if (command == "gamma-graph")
      out = run_gamma_graph(args, cfg, inputs);
    else if (command == "aut") out = run_aut(args, cfg, inputs);
    else if (command == "commutant") out = run_commutant(args, cfg, inputs);
    else if (command == "gp-table") out = run_gp_table(args, cfg, inputs);
    else if (command == "class-equal")
      out = run_class_equal(args, cfg, inputs);
    else if (command == "cinf") out = run_cinf(args, cfg, inputs);
    else if (command == "sisis")
      out = run_sisis(args, cfg, inputs, k_flag, l_flag);
    else if (command == "eq-system") out = run_eq_system(args, cfg, inputs);
    else if (command == "fiber-pair") out = run_fiber_pair(args, cfg, inputs);
    else if (command == "even-construct")
      out = run_even_construct(args, cfg, inputs);
    else if (command == "common-iterate")
      out = run_common_iterate(args, cfg, inputs);
    else if (command == "reversibility")
      out = run_reversibility(args, cfg, inputs);
    else if (command == "free-pair") out = run_free_pair(args, cfg, inputs);
    else if (command == "curve-components")
      out = run_curve_components(args, cfg, inputs);
    else if (command == "tame") out = run_tame(args, cfg, inputs);
    else if (command == "genus-scan") out = run_genus_scan(args, cfg, inputs);
    else {
      std::fprintf(stderr, "error: unknown command %s\n", command.c_str());
      return 4;
    }
    print_report(command, cfg, inputs, out);
    return out.code;
  } catch (const invalid_input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const precision_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const degree_cap_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
