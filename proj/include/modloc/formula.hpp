#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace modloc::logic {

enum class NodeKind { Equal, Atom, NumAtom, Not, And, Or, Exists, Forall, ModExists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable FO+MOD_p syntax tree. An empty And is true, an empty Or is false.
struct Formula {
  NodeKind kind;
  std::string symbol;              // Atom / NumAtom
  std::vector<std::string> args;   // Equal / Atom / NumAtom
  std::string bound;               // quantified variable
  int residue = 0;                 // ModExists: i
  int modulus = 0;                 // ModExists: p
  std::vector<FormulaPtr> children;
};

namespace fo {

FormulaPtr eq(std::string x, std::string y);
FormulaPtr atom(std::string rel, std::vector<std::string> vars);
FormulaPtr num(std::string pred, std::vector<std::string> vars);
FormulaPtr neg(FormulaPtr f);
FormulaPtr all(std::vector<FormulaPtr> fs);
FormulaPtr any(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string x, FormulaPtr f);
FormulaPtr forall(std::string x, FormulaPtr f);
FormulaPtr mod_exists(int p, int i, std::string x, FormulaPtr f);
inline FormulaPtr truth() { return all({}); }
inline FormulaPtr falsity() { return any({}); }

// Nested quantifier prefixes: exists_all({x, y}, f) = (exists x (exists y f)).
FormulaPtr exists_all(const std::vector<std::string>& xs, FormulaPtr f);
FormulaPtr forall_all(const std::vector<std::string>& xs, FormulaPtr f);

}  // namespace fo

// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);
int quantifier_depth(const Formula& f);
std::size_t node_count(const Formula& f);

// S-expression text; parse_formula(to_sexpr(f)) reproduces f.
std::string to_sexpr(const Formula& f);

}  // namespace modloc::logic
