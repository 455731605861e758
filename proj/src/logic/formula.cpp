#include "modloc/formula.hpp"

#include <algorithm>
#include <set>

#include "modloc/errors.hpp"

namespace modloc::logic {

namespace fo {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr eq(std::string x, std::string y) {
  return make({NodeKind::Equal, "", {std::move(x), std::move(y)}, "", 0, 0, {}});
}

FormulaPtr atom(std::string rel, std::vector<std::string> vars) {
  return make({NodeKind::Atom, std::move(rel), std::move(vars), "", 0, 0, {}});
}

FormulaPtr num(std::string pred, std::vector<std::string> vars) {
  return make({NodeKind::NumAtom, std::move(pred), std::move(vars), "", 0, 0, {}});
}

FormulaPtr neg(FormulaPtr f) { return make({NodeKind::Not, "", {}, "", 0, 0, {std::move(f)}}); }

FormulaPtr all(std::vector<FormulaPtr> fs) {
  if (fs.size() == 1) return fs.front();
  return make({NodeKind::And, "", {}, "", 0, 0, std::move(fs)});
}

FormulaPtr any(std::vector<FormulaPtr> fs) {
  if (fs.size() == 1) return fs.front();
  return make({NodeKind::Or, "", {}, "", 0, 0, std::move(fs)});
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return any({neg(std::move(a)), std::move(b)}); }

FormulaPtr exists(std::string x, FormulaPtr f) {
  return make({NodeKind::Exists, "", {}, std::move(x), 0, 0, {std::move(f)}});
}

FormulaPtr forall(std::string x, FormulaPtr f) {
  return make({NodeKind::Forall, "", {}, std::move(x), 0, 0, {std::move(f)}});
}

FormulaPtr mod_exists(int p, int i, std::string x, FormulaPtr f) {
  if (p < 2 || i < 0 || i >= p)
    throw PreconditionError("modulo quantifier needs p >= 2 and 0 <= i < p");
  return make({NodeKind::ModExists, "", {}, std::move(x), i, p, {std::move(f)}});
}

FormulaPtr exists_all(const std::vector<std::string>& xs, FormulaPtr f) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) f = exists(*it, std::move(f));
  return f;
}

FormulaPtr forall_all(const std::vector<std::string>& xs, FormulaPtr f) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) f = forall(*it, std::move(f));
  return f;
}

}  // namespace fo

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  switch (f.kind) {
    case NodeKind::Equal:
    case NodeKind::Atom:
    case NodeKind::NumAtom:
      for (const auto& v : f.args) note(v);
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
    case NodeKind::ModExists:
      bound.push_back(f.bound);
      collect_free(*f.children[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& c : f.children) collect_free(*c, bound, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind) {
    case NodeKind::Equal:
    case NodeKind::Atom:
    case NodeKind::NumAtom:
      out += '(';
      out += f.kind == NodeKind::Equal ? "=" : f.symbol;
      for (const auto& v : f.args) out += ' ' + v;
      out += ')';
      return;
    case NodeKind::Not:
      out += "(not ";
      print(*f.children[0], out);
      out += ')';
      return;
    case NodeKind::And:
    case NodeKind::Or:
      out += f.kind == NodeKind::And ? "(and" : "(or";
      for (const auto& c : f.children) {
        out += ' ';
        print(*c, out);
      }
      out += ')';
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      out += f.kind == NodeKind::Exists ? "(exists " : "(forall ";
      out += f.bound + ' ';
      print(*f.children[0], out);
      out += ')';
      return;
    case NodeKind::ModExists:
      out += "(mod " + std::to_string(f.modulus) + ' ' + std::to_string(f.residue) + ' ' + f.bound + ' ';
      print(*f.children[0], out);
      out += ')';
      return;
  }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

int quantifier_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f.children) d = std::max(d, quantifier_depth(*c));
  bool quant = f.kind == NodeKind::Exists || f.kind == NodeKind::Forall || f.kind == NodeKind::ModExists;
  return d + (quant ? 1 : 0);
}

std::size_t node_count(const Formula& f) {
  std::size_t c = 1;
  for (const auto& ch : f.children) c += node_count(*ch);
  return c;
}

std::string to_sexpr(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace modloc::logic
