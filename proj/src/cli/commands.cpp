#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "modloc/circuit_eval.hpp"
#include "modloc/compile.hpp"
#include "modloc/formulas.hpp"
#include "modloc/generators.hpp"
#include "modloc/graph_queries.hpp"
#include "modloc/invariance.hpp"
#include "modloc/lemmas.hpp"
#include "modloc/locality.hpp"
#include "modloc/parser.hpp"

namespace modloc::cli {

using logic::Embedding;
using logic::Evaluator;
using logic::FormulaFile;
using logic::QueryRelation;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file '" + path + "'");
  out << text;
}

long parse_long(std::string_view s, const char* what) {
  if (s.empty() || s.size() > 9) throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

// "1,2,3", "[1,2,3]" or "(1,2,3)"
std::vector<int> parse_int_list(std::string_view s, const char* what) {
  while (!s.empty() && (s.front() == '[' || s.front() == '(')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ']' || s.back() == ')')) s.remove_suffix(1);
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(static_cast<int>(parse_long(s.substr(pos, comma - pos), what)));
    pos = comma + 1;
  }
  return out;
}

FormulaFile load_formula(const FormulaSource& src) {
  if (src.path.empty() == src.named.empty())
    throw UsageError("give exactly one of a formula file or --named");
  if (!src.named.empty())
    return {gen::named_formula(src.named, src.params), logic::NumericVocabulary::builtin()};
  return logic::parse_formula_file(read_file(src.path));
}

std::vector<Structure> load_structures(const std::string& path) {
  auto all = parse_structures(read_file(path));
  if (all.empty()) throw UsageError("no structure in '" + path + "'");
  return all;
}

Structure load_structure(const std::string& path) {
  auto all = load_structures(path);
  if (all.size() != 1) throw UsageError("expected one structure in '" + path + "'");
  return std::move(all.front());
}

logic::Assignment parse_assignment(const std::vector<std::string>& items, int n) {
  logic::Assignment a;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("assignment must look like x=3, got '" + item + "'");
    long v = parse_long(std::string_view(item).substr(eq + 1), "element");
    if (v >= n) throw UsageError("assigned element " + std::to_string(v) + " outside the universe");
    a[item.substr(0, eq)] = static_cast<Element>(v);
  }
  return a;
}

std::vector<Element> values_for(const Evaluator& ev, const logic::Assignment& a) {
  std::vector<Element> values;
  for (const auto& x : ev.free_order()) {
    auto it = a.find(x);
    if (it == a.end()) throw EvalError("free variable '" + x + "' is not assigned");
    values.push_back(it->second);
  }
  return values;
}

Embedding parse_embedding(const std::string& text, int n) {
  if (text == "identity") return Embedding::identity(n);
  auto p = parse_int_list(text, "embedding entry");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  if (static_cast<int>(p.size()) != n) throw UsageError("embedding must list " + std::to_string(n) + " positions");
  for (int x : p) {
    if (x >= n || seen[x]) throw UsageError("embedding is not a bijection onto [n]");
    seen[x] = 1;
  }
  return Embedding(std::move(p));
}

std::string stats_line(const circuit::CircuitStats& s) {
  return "depth=" + std::to_string(s.depth) + ", size=" + std::to_string(s.size);
}

std::pair<int, int> parse_edge(const std::string& e) {
  auto v = parse_int_list(e, "edge endpoint");
  if (v.size() != 2) throw UsageError("edge must look like u,v, got '" + e + "'");
  return {v[0], v[1]};
}

}  // namespace

int cmd_gen(const RunConfig&, const GenOptions& o, std::ostream& out) {
  if (o.kind == "cycles") {
    out << to_text(gen::cycles(o.lengths));
  } else if (o.kind == "torus") {
    gen::TorusSpec spec{o.h, o.w, o.k};
    out << "# h=" << o.h << " w=" << o.w << " twist=" << o.k << "\n" << to_text(gen::torus(spec));
  } else if (o.kind == "hose") {
    auto h = gen::hose(o.h, o.w);
    out << "# a=" << h.a << " b=" << h.b << "\n" << to_text(h.structure);
  } else if (o.kind == "string") {
    out << to_text(gen::string_structure(o.word, o.alphabet));
  } else if (o.kind == "word") {
    if (o.family == "w") out << gen::w_ell(o.ell) << "\n";
    else if (o.family == "u") out << gen::u_ell(o.ell) << "\n";
    else if (o.family == "v") out << gen::v_ell(o.ell) << "\n";
    else throw UsageError("word family must be w, u or v");
  } else if (o.kind == "hanf-witness") {
    auto hw = gen::hanf_witness(o.ell);
    out << "# u=" << hw.u << "\n# v=" << hw.v << "\n# beta=" << tuple_to_string(hw.beta) << "\n";
    out << to_text(gen::string_structure(hw.u, "012")) << "---\n" << to_text(gen::string_structure(hw.v, "012"));
  } else if (o.kind == "family") {
    auto make = [&]() {
      if (o.family == "reach") return gen::reach_family(o.t, o.ell);
      if (o.family == "cycle") return gen::cycle_family(o.t, o.ell);
      if (o.family == "triangle-reach") return gen::triangle_reach_family(o.t, o.ell);
      if (o.family == "same-distance") return gen::same_distance_family(o.t, o.ell);
      throw UsageError("unknown family '" + o.family + "'");
    };
    const gen::ShiftFamily f = make();
    out << "# family=" << f.name << " anchors=" << tuple_to_string(f.anchors) << " radius=" << f.radius << "\n"
        << to_text(f.structure);
  } else if (o.kind == "subdivided") {
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> marked;
    for (const auto& e : o.edges) edges.push_back(parse_edge(e)), marked.push_back(true);
    for (const auto& e : o.fixed) edges.push_back(parse_edge(e)), marked.push_back(false);
    for (auto [u, v] : edges)
      if (u >= o.nodes || v >= o.nodes) throw UsageError("edge endpoint outside --nodes");
    out << to_text(gen::subdivide(o.nodes, edges, marked, o.ell));
  } else if (o.kind == "formula") {
    out << logic::to_sexpr(*gen::named_formula(o.formula, o.params)) << "\n";
  } else if (o.kind == "counter") {
    out << circuit::to_text(circuit::mod_counter(o.m, o.t));
  } else {
    throw UsageError("unknown generator '" + o.kind + "'");
  }
  return kExitOk;
}

int cmd_eval(const RunConfig&, const EvalOptions& o, std::ostream& out) {
  Structure s = load_structure(o.structure);
  FormulaFile f = load_formula(o.formula);
  logic::check_symbols(*f.formula, s.signature(), f.vocabulary);
  Evaluator ev(f.formula, s.signature(), f.vocabulary);
  auto values = values_for(ev, parse_assignment(o.assign, s.size()));
  Embedding e = parse_embedding(o.embedding, s.size());
  out << "embedding: " << (e.is_identity() ? std::string("identity") : e.to_string()) << "\n";
  out << (ev(s, e, values) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_invariance(const RunConfig& cfg, const InvarianceOptions& o, std::ostream& out) {
  Structure s = load_structure(o.structure);
  FormulaFile f = load_formula(o.formula);
  logic::check_symbols(*f.formula, s.signature(), f.vocabulary);
  Evaluator ev(f.formula, s.signature(), f.vocabulary);
  auto values = values_for(ev, parse_assignment(o.assign, s.size()));
  logic::InvarianceMode mode;
  if (o.mode == "exhaustive") {
    mode = logic::InvarianceMode::exhaustive(cfg.jobs);
    out << "mode: exhaustive\n";
  } else if (o.mode == "sampled") {
    mode = logic::InvarianceMode::sampled(o.samples, cfg.seed);
    out << "mode: sampled " << o.samples << " seed=" << cfg.seed << "\n";
  } else {
    throw UsageError("mode must be exhaustive or sampled");
  }
  auto v = logic::check_invariance(ev, s, values, mode);
  if (v.invariant) {
    out << "invariant (" << v.embeddings_checked << " embeddings)\n";
    return kExitOk;
  }
  out << "not invariant (" << v.embeddings_checked << " embeddings checked)\n";
  out << "counterexample: " << v.counterexample->first.to_string() << " vs "
      << v.counterexample->second.to_string() << "\n";
  return kExitViolation;
}

int cmd_locality(const RunConfig& cfg, const LocalityOptions& o, std::ostream& out) {
  std::vector<Structure> structures;
  for (const auto& path : o.structures)
    for (auto& s : load_structures(path)) structures.push_back(std::move(s));
  std::string notion = o.notion;
  std::replace(notion.begin(), notion.end(), '-', '_');
  if (notion != "hanf" && structures.size() != 1) throw UsageError(o.notion + " takes exactly one structure");
  if (notion == "shift" && o.t < 2) throw UsageError("shift needs --t >= 2");

  std::vector<QueryRelation> qs;
  if (!o.graph_query.empty()) {
    if (!o.formula.path.empty() || !o.formula.named.empty())
      throw UsageError("give either a formula or --graph-query");
    if (o.t < 1) throw UsageError("--graph-query needs the arity --t");
    for (const auto& s : structures) qs.push_back(gen::graph_query(o.graph_query, s, o.t));
    out << "query: " << o.graph_query << " (arity " << o.t << ")\n";
  } else {
    FormulaFile f = load_formula(o.formula);
    for (const auto& s : structures) {
      logic::check_symbols(*f.formula, s.signature(), f.vocabulary);
      auto order = o.free_order.empty() ? logic::free_variables(*f.formula) : o.free_order;
      Evaluator ev(f.formula, s.signature(), f.vocabulary, order);
      if (o.assert_invariant > 0)
        qs.push_back(logic::query_eval(s, ev, logic::QueryPolicy::AssertInvariant,
                                       logic::InvarianceMode::sampled(o.assert_invariant, cfg.seed)));
      else
        qs.push_back(logic::query_eval(s, ev, logic::QueryPolicy::IdentityEmbedding));
    }
    out << "query: " << (o.formula.named.empty() ? o.formula.path : o.formula.named) << " (arity "
        << qs.front().arity() << ")\n";
  }
  for (std::size_t i = 0; i < structures.size(); ++i)
    out << "structure #" << i << ": n=" << structures[i].size() << " |q|=" << qs[i].count() << "\n";

  locality::LocalityReport report;
  if (notion == "gaifman") {
    report = locality::make_report("gaifman", o.radius, locality::gaifman_violations(qs[0], structures[0], o.radius),
                                   o.cap);
  } else if (notion == "weak_gaifman") {
    report = locality::make_report("weak_gaifman", o.radius,
                                   locality::weak_gaifman_violations(qs[0], structures[0], o.radius), o.cap);
  } else if (notion == "shift") {
    const int k = o.k > 0 ? o.k : qs[0].arity() / o.t;
    report = locality::make_report("shift(" + std::to_string(o.t) + ")", o.radius,
                                   locality::shift_violations(qs[0], structures[0], o.radius, o.t, k), o.cap);
  } else if (notion == "hanf") {
    report = locality::make_report("hanf", o.radius, locality::hanf_violations(structures, qs, o.radius), o.cap);
  } else {
    throw UsageError("notion must be gaifman, weak-gaifman, shift or hanf");
  }
  out << report.to_text();
  return report.violated() ? kExitViolation : kExitOk;
}

int cmd_compile(const RunConfig&, const CompileOptions& o, std::ostream& out) {
  FormulaFile f = load_formula(o.formula);
  Signature sig;
  if (!o.structure.empty()) sig = load_structure(o.structure).signature();
  else sig = Signature::parse(o.signature.empty() ? "E/2" : o.signature);
  logic::check_symbols(*f.formula, sig, f.vocabulary);
  if (o.n < 1) throw UsageError("--n must be positive");
  auto order = o.free_order.empty() ? logic::free_variables(*f.formula) : o.free_order;
  auto c = circuit::compile(f.formula, sig, o.n, order, f.vocabulary);
  out << "# inputs=" << c.input_width() << " free=" << order.size() << "\n";
  out << "# " << stats_line(circuit::circuit_stats(c)) << "\n";
  if (o.emit.empty()) out << circuit::to_text(c);
  else write_file(o.emit, circuit::to_text(c));
  return kExitOk;
}

int cmd_transform(const RunConfig& cfg, const TransformOptions& o, std::ostream& out) {
  if (o.lemma == "lemma1") {
    if (o.circuit.empty() || o.structure.empty()) throw UsageError("lemma1 needs a circuit and a structure");
    auto c = circuit::parse_circuit(read_file(o.circuit));
    Structure s = load_structure(o.structure);
    std::vector<Tuple> tuples;
    for (const auto& a : o.anchors) tuples.push_back(parse_int_list(a, "anchor element"));
    circuit::Lemma1Options opt;
    opt.spot_checks = o.spot_checks;
    opt.seed = cfg.seed;
    auto r = circuit::lemma1_transform(c, s, tuples, o.m, opt);
    out << "# original " << stats_line(r.original) << "\n";
    out << "# transformed " << stats_line(r.transformed) << "\n";
    out << "# pi=" << tuple_to_string(r.pi) << "\n";
    if (o.emit.empty()) out << circuit::to_text(r.circuit);
    else write_file(o.emit, circuit::to_text(r.circuit));
    return kExitOk;
  }
  if (o.lemma == "lemma2") {
    if (o.t < 2) throw UsageError("lemma2 needs --t >= 2");
    if (o.circuit.empty() == (o.counter_m == 0)) throw UsageError("give exactly one of a circuit file or --counter-m");
    auto c = o.circuit.empty() ? circuit::mod_counter(o.counter_m, o.t) : circuit::parse_circuit(read_file(o.circuit));
    auto r = circuit::lemma2_transform(c, o.t);
    out << "r=" << r.r << "\n";
    out << "residues=" << r.residue_signature << "\n";
    out << "input " << stats_line(r.input_stats) << "\n";
    out << "output " << stats_line(r.stats) << "\n";
    out << "bounds depth<=" << r.depth_bound << " size<=" << r.size_bound << " " << (r.bounds_ok ? "ok" : "FAILED")
        << "\n";
    if (!o.emit.empty()) write_file(o.emit, circuit::to_text(r.circuit));
    return r.bounds_ok ? kExitOk : kExitViolation;
  }
  throw UsageError("transform takes lemma1 or lemma2");
}

int cmd_swap_check(const RunConfig&, const SwapOptions& o, std::ostream& out) {
  if (!o.closure) {
    if (o.word.empty() || o.cuts.empty()) throw UsageError("swap-check needs a word and --cuts i,j,i',j'");
    auto c = parse_int_list(o.cuts, "cut");
    if (c.size() != 4) throw UsageError("--cuts needs four positions");
    auto w2 = locality::disjoint_swap(o.word, {c[0], c[1], c[2], c[3]}, o.radius);
    out << "word: " << o.word << "\n";
    out << "swap: " << (w2 ? *w2 : std::string("none")) << "\n";
    return kExitOk;
  }
  if (o.n < 1) throw UsageError("--closure needs --n");
  locality::Acceptor accept;
  std::string label;
  if (!o.language.empty()) {
    label = o.language;
    if (o.language == "L") accept = [](std::string_view w) { return gen::in_L(w); };
    else if (o.language == "M") accept = [](std::string_view w) { return gen::in_M(w); };
    else if (o.language == "left") accept = [](std::string_view w) { return gen::in_left(w); };
    else if (o.language == "right") accept = [](std::string_view w) { return gen::in_right(w); };
    else throw UsageError("--language must be L, M, left or right");
  } else {
    FormulaFile f = load_formula(o.formula);
    label = o.formula.named.empty() ? o.formula.path : o.formula.named;
    auto sig = gen::string_signature(o.alphabet);
    logic::check_symbols(*f.formula, sig, f.vocabulary);
    if (!logic::free_variables(*f.formula).empty()) throw UsageError("the acceptor formula must be a sentence");
    auto ev = std::make_shared<Evaluator>(f.formula, sig, f.vocabulary);
    std::string alphabet = o.alphabet;
    accept = [ev, alphabet](std::string_view w) {
      Structure s = gen::string_structure(w, alphabet);
      return (*ev)(s, Embedding::identity(s.size()), std::span<const Element>{});
    };
  }
  auto v = locality::swap_closure_violations(accept, o.alphabet, o.n, o.radius);
  out << "acceptor: " << label << "\nalphabet: " << o.alphabet << "\nn: " << o.n << "\nradius: " << o.radius
      << "\nviolations: " << v.size() << "\n";
  for (std::size_t i = 0; i < v.size() && i < 16; ++i)
    out << "  " << v[i].w << " -> " << v[i].swapped << " cuts=(" << v[i].cuts.i << "," << v[i].cuts.j << ","
        << v[i].cuts.i2 << "," << v[i].cuts.j2 << ")\n";
  if (v.size() > 16) out << "  ... " << v.size() - 16 << " more\n";
  return v.empty() ? kExitOk : kExitViolation;
}

}  // namespace modloc::cli
