#include "modloc/circuit.hpp"

#include <algorithm>

#include "modloc/errors.hpp"

namespace modloc::circuit {

Bits bits_from_string(std::string_view s) {
  Bits b;
  for (char c : s) {
    if (c == '0' || c == '1') b.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c != ' ' && c != '_') throw ParseError("bitstring may only contain 0 and 1", b.size());
  }
  return b;
}

std::string bits_to_string(const Bits& b) {
  std::string s;
  for (auto v : b) s.push_back(v ? '1' : '0');
  return s;
}

Circuit::Circuit(int input_width, std::vector<Gate> gates, int output)
    : width_(input_width), gates_(std::move(gates)), output_(output) {
  if (width_ < 0) throw PreconditionError("negative input width");
  if (output_ < 0 || output_ >= static_cast<int>(gates_.size()))
    throw PreconditionError("output gate out of range");
  for (std::size_t id = 0; id < gates_.size(); ++id) {
    const Gate& g = gates_[id];
    switch (g.kind) {
      case GateKind::Input:
      case GateKind::NegInput:
        if (g.param < 1 || g.param > width_)
          throw PreconditionError("input index " + std::to_string(g.param) + " outside 1.." +
                                  std::to_string(width_));
        [[fallthrough]];
      case GateKind::Const0:
      case GateKind::Const1:
        if (!g.args.empty()) throw PreconditionError("leaf gate with arguments");
        break;
      case GateKind::Mod:
        if (g.param < 2) throw PreconditionError("MOD gate needs p >= 2");
        [[fallthrough]];
      default:
        for (int a : g.args)
          if (a < 0 || a >= static_cast<int>(id))
            throw PreconditionError("gate " + std::to_string(id) + " is not in topological order");
    }
  }
}

CircuitStats circuit_stats(const Circuit& c) {
  const auto& gs = c.gates();
  std::vector<char> live(gs.size(), 0);
  live[c.output()] = 1;
  for (int id = static_cast<int>(gs.size()) - 1; id >= 0; --id)
    if (live[id])
      for (int a : gs[id].args) live[a] = 1;
  std::vector<int> depth(gs.size(), 0);
  CircuitStats st;
  for (std::size_t id = 0; id < gs.size(); ++id) {
    if (!live[id] || is_leaf(gs[id].kind)) continue;
    int d = 0;
    for (int a : gs[id].args) d = std::max(d, depth[a]);
    depth[id] = d + 1;
    ++st.size;
  }
  st.depth = depth[c.output()];
  return st;
}

bool eval_circuit(const Circuit& c, const Bits& bits) {
  if (static_cast<int>(bits.size()) != c.input_width())
    throw PreconditionError("input has " + std::to_string(bits.size()) + " bits, circuit expects " +
                            std::to_string(c.input_width()));
  const auto& gs = c.gates();
  std::vector<std::uint8_t> v(gs.size(), 0);
  for (std::size_t id = 0; id <= static_cast<std::size_t>(c.output()); ++id) {
    const Gate& g = gs[id];
    switch (g.kind) {
      case GateKind::Input: v[id] = bits[g.param - 1] ? 1 : 0; break;
      case GateKind::NegInput: v[id] = bits[g.param - 1] ? 0 : 1; break;
      case GateKind::Const0: v[id] = 0; break;
      case GateKind::Const1: v[id] = 1; break;
      case GateKind::And: {
        std::uint8_t r = 1;
        for (int a : g.args) r &= v[a];
        v[id] = r;
        break;
      }
      case GateKind::Or: {
        std::uint8_t r = 0;
        for (int a : g.args) r |= v[a];
        v[id] = r;
        break;
      }
      case GateKind::Mod: {
        int count = 0;
        for (int a : g.args) count += v[a];
        v[id] = count % g.param == 0 ? 1 : 0;
        break;
      }
    }
  }
  return v[c.output()] != 0;
}

InputLiteral InputLiteral::negated() const {
  switch (kind) {
    case Kind::Const0: return one();
    case Kind::Const1: return zero();
    case Kind::Var: return neg_var_of(var);
    case Kind::NegVar: return var_of(var);
  }
  return zero();
}

Circuit substitute_inputs(const Circuit& c, const InputSubstitution& subst, int new_width) {
  if (static_cast<int>(subst.size()) != c.input_width())
    throw PreconditionError("substitution must cover all " + std::to_string(c.input_width()) +
                            " inputs");
  for (const auto& lit : subst)
    if ((lit.kind == InputLiteral::Kind::Var || lit.kind == InputLiteral::Kind::NegVar) &&
        (lit.var < 1 || lit.var > new_width))
      throw PreconditionError("substituted variable outside the new width");
  std::vector<Gate> gates = c.gates();
  for (auto& g : gates) {
    if (g.kind != GateKind::Input && g.kind != GateKind::NegInput) continue;
    InputLiteral lit = subst[g.param - 1];
    if (g.kind == GateKind::NegInput) lit = lit.negated();
    switch (lit.kind) {
      case InputLiteral::Kind::Const0: g = {GateKind::Const0, 0, {}}; break;
      case InputLiteral::Kind::Const1: g = {GateKind::Const1, 0, {}}; break;
      case InputLiteral::Kind::Var: g = {GateKind::Input, lit.var, {}}; break;
      case InputLiteral::Kind::NegVar: g = {GateKind::NegInput, lit.var, {}}; break;
    }
  }
  return Circuit(new_width, std::move(gates), c.output());
}

}  // namespace modloc::circuit
