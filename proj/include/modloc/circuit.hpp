#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace modloc::circuit {

enum class GateKind : std::uint8_t { And, Or, Mod, Input, NegInput, Const0, Const1 };

// param: p for Mod, input index nu (1-based) for Input/NegInput.
struct Gate {
  GateKind kind;
  int param = 0;
  std::vector<int> args;
  bool operator==(const Gate&) const = default;
};

inline bool is_leaf(GateKind k) { return k != GateKind::And && k != GateKind::Or && k != GateKind::Mod; }

using Bits = std::vector<std::uint8_t>;
Bits bits_from_string(std::string_view s);
std::string bits_to_string(const Bits& b);

// DAG in topological order (every argument id is smaller than the gate id),
// with a single output gate.
class Circuit {
 public:
  Circuit(int input_width, std::vector<Gate> gates, int output);

  int input_width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int id) const { return gates_[id]; }
  int output() const { return output_; }

  bool operator==(const Circuit&) const = default;

 private:
  int width_;
  std::vector<Gate> gates_;
  int output_;
};

struct CircuitStats {
  int depth = 0;          // edges on the longest leaf-to-output path
  std::size_t size = 0;   // AND/OR/MOD gates reachable from the output
};

CircuitStats circuit_stats(const Circuit& c);

// Reference evaluation. A MOD_p gate outputs 1 iff its count of 1-inputs is
// divisible by p.
bool eval_circuit(const Circuit& c, const Bits& bits);

std::string to_text(const Circuit& c);
Circuit parse_circuit(std::string_view text);

// Hash-consing circuit builder with constant folding. AND/OR arguments are
// treated as sets, MOD arguments as multisets.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int input_width);

  int input_width() const { return width_; }
  int literal(int nu, bool negated);
  int input(int nu) { return literal(nu, false); }
  int neg_input(int nu) { return literal(nu, true); }
  int constant(bool value);
  int and_of(std::vector<int> args);
  int or_of(std::vector<int> args);
  int mod_of(int p, std::vector<int> args);

  // Gate computing the complement of `id` (De Morgan through AND/OR, MOD
  // gates complemented by Const1 padding).
  int negation(int id);

  bool is_constant(int id, bool value) const;
  const Gate& gate(int id) const { return gates_[id]; }
  std::size_t gate_count() const { return gates_.size(); }

  // Copy of `c` with every leaf replaced by leaf_map(leaf gate).
  template <class LeafMap>
  int import(const Circuit& c, LeafMap&& leaf_map);

  // Pruned, renumbered circuit computing gate `output`.
  Circuit build(int output) const;

 private:
  int intern(Gate g);

  int width_;
  std::vector<Gate> gates_;
  std::map<std::tuple<GateKind, int, std::vector<int>>, int> index_;
  std::map<int, int> negation_memo_;
};

template <class LeafMap>
int CircuitBuilder::import(const Circuit& c, LeafMap&& leaf_map) {
  std::vector<int> id(c.gates().size());
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    const Gate& gt = c.gates()[g];
    std::vector<int> args;
    for (int a : gt.args) args.push_back(id[a]);
    switch (gt.kind) {
      case GateKind::And: id[g] = and_of(std::move(args)); break;
      case GateKind::Or: id[g] = or_of(std::move(args)); break;
      case GateKind::Mod: id[g] = mod_of(gt.param, std::move(args)); break;
      default: id[g] = leaf_map(gt); break;
    }
  }
  return id[c.output()];
}

struct InputLiteral {
  enum class Kind : std::uint8_t { Const0, Const1, Var, NegVar };
  Kind kind = Kind::Const0;
  int var = 0;  // 1-based, for Var/NegVar

  static InputLiteral zero() { return {Kind::Const0, 0}; }
  static InputLiteral one() { return {Kind::Const1, 0}; }
  static InputLiteral var_of(int nu) { return {Kind::Var, nu}; }
  static InputLiteral neg_var_of(int nu) { return {Kind::NegVar, nu}; }
  InputLiteral negated() const;
  bool operator==(const InputLiteral&) const = default;
};

// Indexed by original input nu-1.
using InputSubstitution = std::vector<InputLiteral>;

// Rewrites input leaves only; the gate DAG, its size and depth are unchanged.
Circuit substitute_inputs(const Circuit& c, const InputSubstitution& subst, int new_width);

}  // namespace modloc::circuit
