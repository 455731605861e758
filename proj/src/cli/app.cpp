#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "modloc/cli.hpp"

namespace modloc::cli {

std::uint64_t default_seed() {
  const char* env = std::getenv("MODLOC_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  return (end && *end == '\0') ? static_cast<std::uint64_t>(v) : 0;
}

namespace {

void add_formula_options(CLI::App* sub, FormulaSource& f) {
  sub->add_option("--named", f.named, "Named construction instead of a formula file");
  sub->add_option("--param", f.params, "Parameter of the named construction (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modloc: FO+MOD_p evaluation, locality testers and MOD_p circuit constructions", "modloc"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = default_seed();
  app.add_option("--seed", cfg.seed, "Seed for all randomized steps (default: MODLOC_SEED or 0)");
  app.add_flag("--deterministic", cfg.deterministic, "Suppress timing output");
  app.add_option("--jobs", cfg.jobs, "Worker threads for enumeration loops")->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate structures, words, formulas and circuits");
  g->require_subcommand(1);
  auto kind = [&gen](const char* k) { return [&gen, k] { gen.kind = k; }; };
  auto* g_cycles = g->add_subcommand("cycles", "Disjoint directed cycles");
  g_cycles->add_option("lengths", gen.lengths, "Cycle lengths")->required();
  g_cycles->callback(kind("cycles"));
  auto* g_torus = g->add_subcommand("torus", "Torus of height h, width w and twist k");
  g_torus->add_option("--height", gen.h)->required();
  g_torus->add_option("--width", gen.w)->required();
  g_torus->add_option("--twist", gen.k);
  g_torus->callback(kind("torus"));
  auto* g_hose = g->add_subcommand("hose", "Hose of height h and width w");
  g_hose->add_option("--height", gen.h)->required();
  g_hose->add_option("--width", gen.w)->required();
  g_hose->callback(kind("hose"));
  auto* g_string = g->add_subcommand("string", "String structure");
  g_string->add_option("word", gen.word)->required();
  g_string->add_option("--alphabet", gen.alphabet);
  g_string->callback(kind("string"));
  auto* g_word = g->add_subcommand("word", "Witness words w, u or v at scale l");
  g_word->add_option("family", gen.family)->required();
  g_word->add_option("--ell", gen.ell)->required();
  g_word->callback(kind("word"));
  auto* g_hanf = g->add_subcommand("hanf-witness", "String structures of u_l and v_l with the bijection");
  g_hanf->add_option("--ell", gen.ell)->required();
  g_hanf->callback(kind("hanf-witness"));
  auto* g_family = g->add_subcommand("family", "reach | cycle | triangle-reach | same-distance witness graph");
  g_family->add_option("name", gen.family)->required();
  g_family->add_option("--t", gen.t)->required();
  g_family->add_option("--ell", gen.ell)->required();
  g_family->callback(kind("family"));
  auto* g_sub = g->add_subcommand("subdivided", "l-fold subdivision of the --edge edges");
  g_sub->add_option("--nodes", gen.nodes)->required();
  g_sub->add_option("--edge", gen.edges, "Subdivided edge u,v (repeatable)");
  g_sub->add_option("--fixed", gen.fixed, "Kept edge u,v (repeatable)");
  g_sub->add_option("--ell", gen.ell)->required();
  g_sub->callback(kind("subdivided"));
  auto* g_formula = g->add_subcommand("formula", "Named formula as an S-expression");
  g_formula->add_option("name", gen.formula)->required();
  g_formula->add_option("--param", gen.params);
  g_formula->callback(kind("formula"));
  auto* g_counter = g->add_subcommand("counter", "Circuit accepting |w|_1 = 0 mod t");
  g_counter->add_option("--m", gen.m)->required();
  g_counter->add_option("--t", gen.t)->required();
  g_counter->callback(kind("counter"));

  EvalOptions ev;
  auto* e = app.add_subcommand("eval", "Evaluate a formula on a structure");
  e->add_option("structure", ev.structure)->required();
  e->add_option("formula", ev.formula.path);
  add_formula_options(e, ev.formula);
  e->add_option("--assign", ev.assign, "Free-variable value x=3 (repeatable)");
  e->add_option("--embedding", ev.embedding, "identity or a permutation like 2,0,1");

  InvarianceOptions inv;
  auto* i = app.add_subcommand("invariance", "Check embedding invariance");
  i->add_option("structure", inv.structure)->required();
  i->add_option("formula", inv.formula.path);
  add_formula_options(i, inv.formula);
  i->add_option("--assign", inv.assign);
  i->add_option("--mode", inv.mode, "exhaustive | sampled");
  i->add_option("--samples", inv.samples, "Embeddings in sampled mode, identity included");

  LocalityOptions loc;
  auto* l = app.add_subcommand("locality", "Run a locality tester");
  l->add_option("notion", loc.notion, "gaifman | weak-gaifman | shift | hanf")->required();
  l->add_option("structures", loc.structures, "Structure files")->required();
  l->add_option("--formula", loc.formula.path);
  add_formula_options(l, loc.formula);
  l->add_option("--graph-query", loc.graph_query, "reach | cycle | triangle-reach | same-distance");
  l->add_option("--free", loc.free_order, "Free-variable order")->delimiter(',');
  l->add_option("--radius", loc.radius)->required();
  l->add_option("--t", loc.t);
  l->add_option("--k", loc.k);
  l->add_option("--cap", loc.cap, "Witnesses listed in the report");
  l->add_option("--assert-invariant", loc.assert_invariant, "Sampled invariance check per tuple (embeddings)");

  CompileOptions comp;
  auto* c = app.add_subcommand("compile", "Compile a formula into a MOD_p circuit");
  c->add_option("formula", comp.formula.path);
  add_formula_options(c, comp.formula);
  c->add_option("--n", comp.n)->required();
  c->add_option("--signature", comp.signature, "Signature like \"E/2 P/1\" (default E/2)");
  c->add_option("--structure", comp.structure, "Take the signature from this structure file");
  c->add_option("--free", comp.free_order)->delimiter(',');
  c->add_option("--emit", comp.emit, "Write the circuit to this file");

  TransformOptions tr;
  auto* t = app.add_subcommand("transform", "Apply a circuit transformation lemma");
  t->add_option("lemma", tr.lemma, "lemma1 | lemma2")->required();
  t->add_option("circuit", tr.circuit);
  t->add_option("structure", tr.structure);
  t->add_option("--anchor", tr.anchors, "Anchor tuple like 0 or 0,1 (repeatable, lemma1)");
  t->add_option("--m", tr.m, "Neighborhood radius (lemma1)");
  t->add_option("--t", tr.t, "Period (lemma2)");
  t->add_option("--counter-m", tr.counter_m, "Use the m-input mod-t counter as input (lemma2)");
  t->add_option("--spot-checks", tr.spot_checks);
  t->add_option("--emit", tr.emit);

  SwapOptions sw;
  auto* s = app.add_subcommand("swap-check", "Disjoint swaps and swap-closure search");
  s->add_option("word", sw.word);
  s->add_option("--cuts", sw.cuts, "i,j,i',j'");
  s->add_option("--radius", sw.radius);
  s->add_flag("--closure", sw.closure, "Search all strings of length --n");
  s->add_option("--alphabet", sw.alphabet);
  s->add_option("--n", sw.n);
  s->add_option("--language", sw.language, "L | M | left | right");
  s->add_option("--formula", sw.formula.path);
  add_formula_options(s, sw.formula);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  out << "# modloc " << cfg.command << " seed=" << cfg.seed << "\n";
  int code = kExitOk;
  try {
    if (chosen == g) code = cmd_gen(cfg, gen, out);
    else if (chosen == e) code = cmd_eval(cfg, ev, out);
    else if (chosen == i) code = cmd_invariance(cfg, inv, out);
    else if (chosen == l) code = cmd_locality(cfg, loc, out);
    else if (chosen == c) code = cmd_compile(cfg, comp, out);
    else if (chosen == t) code = cmd_transform(cfg, tr, out);
    else code = cmd_swap_check(cfg, sw, out);
  } catch (const EvalError& ex) {
    err << "error: " << ex.what() << "\n";
    code = kExitViolation;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    code = kExitUsage;
  }
  out.flush();
  if (!cfg.deterministic) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "# elapsed_ms=" << ms << "\n";
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace modloc::cli
