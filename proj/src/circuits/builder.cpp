#include <algorithm>

#include "modloc/circuit.hpp"
#include "modloc/errors.hpp"

namespace modloc::circuit {

CircuitBuilder::CircuitBuilder(int input_width) : width_(input_width) {}

int CircuitBuilder::intern(Gate g) {
  auto key = std::make_tuple(g.kind, g.param, g.args);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(gates_.size());
  gates_.push_back(std::move(g));
  index_.emplace(std::move(key), id);
  return id;
}

int CircuitBuilder::literal(int nu, bool negated) {
  if (nu < 1 || nu > width_) throw PreconditionError("input index out of range");
  return intern({negated ? GateKind::NegInput : GateKind::Input, nu, {}});
}

int CircuitBuilder::constant(bool value) {
  return intern({value ? GateKind::Const1 : GateKind::Const0, 0, {}});
}

bool CircuitBuilder::is_constant(int id, bool value) const {
  return gates_[id].kind == (value ? GateKind::Const1 : GateKind::Const0);
}

int CircuitBuilder::and_of(std::vector<int> args) {
  std::vector<int> kept;
  for (int a : args) {
    if (is_constant(a, false)) return constant(false);
    if (!is_constant(a, true)) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) return constant(true);
  if (kept.size() == 1) return kept.front();
  return intern({GateKind::And, 0, std::move(kept)});
}

int CircuitBuilder::or_of(std::vector<int> args) {
  std::vector<int> kept;
  for (int a : args) {
    if (is_constant(a, true)) return constant(true);
    if (!is_constant(a, false)) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) return constant(false);
  if (kept.size() == 1) return kept.front();
  return intern({GateKind::Or, 0, std::move(kept)});
}

int CircuitBuilder::mod_of(int p, std::vector<int> args) {
  if (p < 2) throw PreconditionError("MOD gate needs p >= 2");
  int ones = 0;
  std::vector<int> kept;
  for (int a : args) {
    if (is_constant(a, true)) ++ones;
    else if (!is_constant(a, false)) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end());
  // p copies of the same argument contribute 0 mod p
  std::vector<int> reduced;
  for (std::size_t i = 0; i < kept.size();) {
    std::size_t j = i;
    while (j < kept.size() && kept[j] == kept[i]) ++j;
    for (std::size_t r = 0; r < (j - i) % static_cast<std::size_t>(p); ++r) reduced.push_back(kept[i]);
    i = j;
  }
  ones %= p;
  if (reduced.empty()) return constant(ones == 0);
  if (ones > 0) {
    int one = constant(true);
    reduced.insert(reduced.end(), static_cast<std::size_t>(ones), one);
    std::sort(reduced.begin(), reduced.end());
  }
  return intern({GateKind::Mod, p, std::move(reduced)});
}

int CircuitBuilder::negation(int id) {
  auto memo = negation_memo_.find(id);
  if (memo != negation_memo_.end()) return memo->second;
  const Gate g = gates_[id];
  int out = -1;
  switch (g.kind) {
    case GateKind::Const0: out = constant(true); break;
    case GateKind::Const1: out = constant(false); break;
    case GateKind::Input: out = literal(g.param, true); break;
    case GateKind::NegInput: out = literal(g.param, false); break;
    case GateKind::And:
    case GateKind::Or: {
      std::vector<int> neg;
      for (int a : g.args) neg.push_back(negation(a));
      out = g.kind == GateKind::And ? or_of(std::move(neg)) : and_of(std::move(neg));
      break;
    }
    case GateKind::Mod: {
      // count != 0 mod p  iff  count + (p-k) == 0 mod p for some k in 1..p-1
      std::vector<int> alternatives;
      for (int k = 1; k < g.param; ++k) {
        std::vector<int> args = g.args;
        args.insert(args.end(), static_cast<std::size_t>(g.param - k), constant(true));
        alternatives.push_back(mod_of(g.param, std::move(args)));
      }
      out = or_of(std::move(alternatives));
      break;
    }
  }
  negation_memo_[id] = out;
  return out;
}

Circuit CircuitBuilder::build(int output) const {
  std::vector<char> live(gates_.size(), 0);
  live[output] = 1;
  for (int id = output; id >= 0; --id)
    if (live[id])
      for (int a : gates_[id].args) live[a] = 1;
  std::vector<int> renum(gates_.size(), -1);
  std::vector<Gate> out;
  for (std::size_t id = 0; id < gates_.size(); ++id) {
    if (!live[id]) continue;
    Gate g = gates_[id];
    for (auto& a : g.args) a = renum[a];
    renum[id] = static_cast<int>(out.size());
    out.push_back(std::move(g));
  }
  return Circuit(width_, std::move(out), renum[output]);
}

}  // namespace modloc::circuit
