#include "modloc/formulas.hpp"

#include <map>
#include <optional>

#include "modloc/errors.hpp"

namespace modloc::gen {

using namespace logic::fo;
using logic::Formula;
using logic::NodeKind;

namespace {

// Nested E-path of exactly k steps from a to b, intermediate variables
// prefix1, prefix2, ...
FormulaPtr path(const std::string& rel, int k, const std::string& a, const std::string& b,
                const std::string& prefix) {
  if (k == 0) return eq(a, b);
  FormulaPtr inner = atom(rel, {k == 1 ? a : prefix + std::to_string(k - 1), b});
  for (int s = k - 1; s >= 1; --s) {
    const std::string from = s == 1 ? a : prefix + std::to_string(s - 1);
    const std::string to = prefix + std::to_string(s);
    inner = exists(to, all({atom(rel, {from, to}), inner}));
  }
  return inner;
}

// unique u with phi(u): exists u (phi(u) and forall v (phi(v) -> v = u))
FormulaPtr unique(const std::function<FormulaPtr(const std::string&)>& phi, const std::string& u,
                  const std::string& v) {
  return exists(u, all({phi(u), forall(v, any({neg(phi(v)), eq(v, u)}))}));
}

FormulaPtr permutation_graph(const std::string& rel) {
  return all({
      forall("x", exists("y", atom(rel, {"x", "y"}))),
      forall("x", forall("y", implies(atom(rel, {"x", "y"}),
                                      forall("y'", implies(atom(rel, {"x", "y'"}), eq("y", "y'")))))),
      forall("y", exists("x", atom(rel, {"x", "y"}))),
      forall("y", forall("x", implies(atom(rel, {"x", "y"}),
                                      forall("x'", implies(atom(rel, {"x'", "y"}), eq("x", "x'")))))),
  });
}

}  // namespace

FormulaPtr rewrite(const FormulaPtr& f, const AtomMap& atoms, const Guard& guard) {
  switch (f->kind) {
    case NodeKind::Atom:
      if (atoms)
        if (auto r = atoms(*f)) return r;
      return f;
    case NodeKind::Equal:
    case NodeKind::NumAtom:
      return f;
    case NodeKind::Not:
      return neg(rewrite(f->children[0], atoms, guard));
    case NodeKind::And:
    case NodeKind::Or: {
      std::vector<FormulaPtr> cs;
      for (const auto& c : f->children) cs.push_back(rewrite(c, atoms, guard));
      return f->kind == NodeKind::And ? all(std::move(cs)) : any(std::move(cs));
    }
    case NodeKind::Exists:
    case NodeKind::Forall:
    case NodeKind::ModExists: {
      FormulaPtr body = rewrite(f->children[0], atoms, guard);
      if (!guard) {
        if (f->kind == NodeKind::Exists) return exists(f->bound, body);
        if (f->kind == NodeKind::Forall) return forall(f->bound, body);
        return mod_exists(f->modulus, f->residue, f->bound, body);
      }
      FormulaPtr g = guard(f->bound);
      if (f->kind == NodeKind::Exists) return exists(f->bound, all({g, body}));
      if (f->kind == NodeKind::Forall) return forall(f->bound, implies(g, body));
      return mod_exists(f->modulus, f->residue, f->bound, all({g, body}));
    }
  }
  return f;
}

namespace {

FormulaPtr rename_rec(const FormulaPtr& f, const std::string& suffix, std::map<std::string, std::string>& scope) {
  auto name = [&](const std::string& v) {
    auto it = scope.find(v);
    return it == scope.end() ? v : it->second;
  };
  auto Node = [&](Formula n) { return std::make_shared<const Formula>(std::move(n)); };
  switch (f->kind) {
    case NodeKind::Equal:
    case NodeKind::Atom:
    case NodeKind::NumAtom: {
      Formula n = *f;
      for (auto& a : n.args) a = name(a);
      return Node(std::move(n));
    }
    case NodeKind::Not:
    case NodeKind::And:
    case NodeKind::Or: {
      Formula n = *f;
      for (auto& c : n.children) c = rename_rec(c, suffix, scope);
      return Node(std::move(n));
    }
    default: {
      Formula n = *f;
      auto saved = scope.find(f->bound) == scope.end() ? std::optional<std::string>{}
                                                        : std::optional<std::string>{scope[f->bound]};
      scope[f->bound] = f->bound + suffix;
      n.bound = f->bound + suffix;
      n.children[0] = rename_rec(f->children[0], suffix, scope);
      if (saved) scope[f->bound] = *saved;
      else scope.erase(f->bound);
      return Node(std::move(n));
    }
  }
}

}  // namespace

FormulaPtr rename_bound(const FormulaPtr& f, const std::string& suffix) {
  std::map<std::string, std::string> scope;
  return rename_rec(f, suffix, scope);
}

FormulaPtr phi_cycles() { return permutation_graph("E"); }

FormulaPtr phi_inversions() {
  FormulaPtr swapped = exists("x'", all({atom("E", {"x", "x'"}),
                                         exists("y'", all({atom("E", {"y", "y'"}), num("num<", {"y'", "x'"})}))}));
  return mod_exists(2, 0, "x", mod_exists(2, 1, "y", all({num("num<", {"x", "y"}), swapped})));
}

FormulaPtr even_cycles() { return all({phi_cycles(), phi_inversions()}); }

FormulaPtr same_column(int h, const std::string& a, const std::string& b) {
  std::vector<FormulaPtr> alts;
  for (int k = 0; k < h; ++k) alts.push_back(path("E1", k, a, b, a + b + "c"));
  return any(std::move(alts));
}

FormulaPtr between(int h, const std::string& a, const std::string& b, const std::string& c) {
  std::vector<FormulaPtr> alts;
  for (int i = 1; i < h; ++i)
    for (int j = 0; i + j < h; ++j)
      alts.push_back(all({path("E1", i, a, b, a + b + "p"), path("E1", j, b, c, b + c + "q")}));
  return any(std::move(alts));
}

FormulaPtr column_least(int h, const std::string& a) {
  const std::string v = a + "m";
  return forall(v, any({eq(a, v), num("num<", {a, v}), neg(same_column(h, a, v))}));
}

FormulaPtr on_turn_path(int h, const std::string& x) {
  // exists y, z, z' with y, z column-least, E2(z, z') and x strictly after y
  // on the E1-path from y to z'
  return exists("y", all({same_column(h, "y", x), column_least(h, "y"),
                          exists("z'", all({between(h, "y", x, "z'"),
                                            exists("z", all({atom("E2", {"z", "z'"}), column_least(h, "z")}))}))}));
}

FormulaPtr theta(int h) {
  std::vector<FormulaPtr> column_len{path("E1", h, "x", "x", "xk")};
  for (int k = 1; k < h; ++k) column_len.push_back(neg(path("E1", k, "x", "x", "xk")));
  return all({
      permutation_graph("E1"),
      permutation_graph("E2"),
      forall("x", all(std::move(column_len))),
      forall("x", forall("y", implies(atom("E2", {"x", "y"}), neg(same_column(h, "x", "y"))))),
      forall("x", forall("y", implies(atom("E1", {"x", "y"}),
                                      forall("x'", implies(atom("E2", {"x", "x'"}),
                                                           forall("y'", implies(atom("E2", {"y", "y'"}),
                                                                                atom("E1", {"x'", "y'"})))))))),
  });
}

FormulaPtr psi_twist(int h) { return mod_exists(h, 0, "x", on_turn_path(h, "x")); }

FormulaPtr torus_twist(int h) {
  if (h < 2) throw PreconditionError("torus height must be >= 2");
  return all({theta(h), psi_twist(h)});
}

FormulaPtr hose_query(int h) {
  if (h < 2) throw PreconditionError("hose height must be >= 2");
  auto y = [](int i) { return "y" + std::to_string(i); };
  auto xs = [](int i) { return "x" + std::to_string(i); };
  FormulaPtr inner = rewrite(torus_twist(h), [&](const Formula& a) -> FormulaPtr {
    if (a.symbol != "E2") return nullptr;
    std::vector<FormulaPtr> alts{atom("E2", a.args)};
    for (int i = 0; i < h; ++i) alts.push_back(all({eq(a.args[0], y(i)), eq(a.args[1], xs(i))}));
    return any(std::move(alts));
  });
  // x-block: x0 = x and x0 -> x1 -> ... -> x_{h-1} -> x0 along E1
  inner = all({atom("E1", {xs(h - 1), xs(0)}), inner});
  for (int i = h - 1; i >= 1; --i) inner = exists(xs(i), all({atom("E1", {xs(i - 1), xs(i)}), inner}));
  inner = exists(xs(0), all({eq(xs(0), "x"), inner}));
  // y-block: R(y0) unique and y0 -> y1 -> ... -> y_{h-1} -> y0 along E1
  inner = all({atom("E1", {y(h - 1), y(0)}), inner});
  for (int i = h - 1; i >= 1; --i) inner = exists(y(i), all({atom("E1", {y(i - 1), y(i)}), inner}));
  return exists(y(0), all({atom("R", {y(0)}), forall("v", implies(atom("R", {"v"}), eq("v", y(0)))), inner}));
}

namespace {

FormulaPtr next_is(const std::string& u, const std::string& letter, const std::string& s) {
  return exists(s, all({atom("E", {u, s}), atom("P" + letter, {s})}));
}
FormulaPtr prev_is(const std::string& u, const std::string& letter, const std::string& s) {
  return exists(s, all({atom("E", {s, u}), atom("P" + letter, {s})}));
}
FormulaPtr first_position(const std::string& u, const std::string& s) { return neg(exists(s, atom("E", {s, u}))); }
FormulaPtr last_position(const std::string& u, const std::string& s) { return neg(exists(s, atom("E", {u, s}))); }

}  // namespace

FormulaPtr string_swap_query() {
  auto one_zero = [](const std::string& u) { return all({atom("P1", {u}), next_is(u, "0", "s")}); };
  auto zero_one = [](const std::string& u) { return all({atom("P1", {u}), prev_is(u, "0", "s")}); };
  FormulaPtr cyc = rename_bound(even_cycles(), "_c");
  FormulaPtr sim = rewrite(
      cyc,
      [](const Formula& a) -> FormulaPtr {
        if (a.symbol != "E") return nullptr;
        const auto& u = a.args[0];
        const auto& v = a.args[1];
        return any({atom("E", {u, v}), all({eq(u, "x"), eq(v, "y")}), all({eq(u, "x'"), eq(v, "y'")})});
      },
      [](const std::string& v) { return atom("P1", {v}); });
  FormulaPtr y_block = exists(
      "y", all({first_position("y", "s"), atom("P1", {"y"}),
                exists("y'", all({zero_one("y'"), forall("v", implies(zero_one("v"), eq("v", "y'"))), sim}))}));
  return exists("x'", all({neg(eq("x'", "x")), one_zero("x'"),
                           forall("v", implies(all({neg(eq("v", "x")), one_zero("v")}), eq("v", "x'"))), y_block}));
}

FormulaPtr phi_M() {
  auto p = [](const char* l, const std::string& u) { return atom(std::string("P") + l, {u}); };
  auto one_then = [&](const char* l) {
    return [&, l](const std::string& u) { return all({p("1", u), next_is(u, l, "s")}); };
  };
  return all({
      forall("u", implies(first_position("u", "s"), p("1", "u"))),
      forall("u", implies(last_position("u", "s"), p("0", "u"))),
      forall("u", implies(p("1", "u"), forall("s", implies(atom("E", {"u", "s"}),
                                                           any({p("0", "s"), p("1", "s"), p("2", "s")}))))),
      unique(one_then("0"), "u", "v"),
      unique(one_then("2"), "u", "v"),
      forall("u", implies(p("0", "u"), forall("s", implies(atom("E", {"u", "s"}), any({p("0", "s"), p("1", "s")}))))),
      unique([&](const std::string& u) { return all({p("0", u), next_is(u, "1", "s")}); }, "u", "v"),
      unique([&](const std::string& u) { return p("2", u); }, "u", "v"),
      forall("u", implies(p("2", "u"), next_is("u", "0", "s"))),
  });
}

FormulaPtr language_L() {
  FormulaPtr sim = rewrite(
      even_cycles(),
      [](const Formula& a) -> FormulaPtr {
        if (a.symbol != "E") return nullptr;
        const auto& mu = a.args[0];
        const auto& nu = a.args[1];
        return any({atom("E", {mu, nu}), all({atom("P2", {mu}), first_position(nu, "s")}),
                    all({atom("P1", {mu}), atom("P1", {nu}), next_is(mu, "0", "s"), prev_is(nu, "0", "s")})});
      },
      [](const std::string& v) { return any({atom("P1", {v}), atom("P2", {v})}); });
  return all({phi_M(), sim});
}

FormulaPtr reach_shift(int t, int max_len) {
  if (t < 2 || max_len < 0) throw PreconditionError("reach_shift needs t >= 2 and max_len >= 0");
  std::vector<FormulaPtr> parts;
  for (int i = 0; i + 1 < t; ++i) {
    const std::string a = "x" + std::to_string(i), b = "x" + std::to_string(i + 1);
    // at most max_len steps: from = b or one step then at most budget - 1 more
    std::function<FormulaPtr(const std::string&, int)> reach = [&](const std::string& from, int budget) {
      if (budget == 0) return eq(from, b);
      const std::string z = "r" + std::to_string(i) + "_" + std::to_string(max_len - budget + 1);
      return any({eq(from, b), exists(z, all({atom("E", {from, z}), reach(z, budget - 1)}))});
    };
    parts.push_back(reach(a, max_len));
  }
  return all(std::move(parts));
}

const std::vector<std::string>& named_formula_names() {
  static const std::vector<std::string> names{"even_cycles", "torus_twist", "hose_query",
                                              "string_swap_query", "language_L", "reach_shift"};
  return names;
}

FormulaPtr named_formula(std::string_view name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionError(std::string(name) + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "even_cycles") return need(0), even_cycles();
  if (name == "torus_twist") return need(1), torus_twist(params[0]);
  if (name == "hose_query") return need(1), hose_query(params[0]);
  if (name == "string_swap_query") return need(0), string_swap_query();
  if (name == "language_L") return need(0), language_L();
  if (name == "reach_shift") return need(2), reach_shift(params[0], params[1]);
  throw SymbolError("unknown formula name '" + std::string(name) + "'");
}

}  // namespace modloc::gen
