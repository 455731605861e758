#include "modloc/compile.hpp"

#include <map>

#include "modloc/evaluate.hpp"

namespace modloc::circuit {

namespace {

using logic::NodeKind;

class Compiler {
 public:
  Compiler(const logic::ResolvedFormula& rf, const RepLayout& layout, CircuitBuilder& b)
      : rf_(rf), layout_(layout), b_(b), n_(layout.universe()), env_(rf.slot_count, 0) {}

  std::vector<int>& env() { return env_; }

  int gate(int id, bool positive) {
    const auto& nd = rf_.nodes[id];
    std::vector<int> key{id, positive ? 1 : 0};
    for (int s : nd.free_slots) key.push_back(env_[s]);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int g = build(nd, positive);
    memo_.emplace(std::move(key), g);
    return g;
  }

 private:
  int build(const logic::ResolvedNode& nd, bool positive) {
    switch (nd.kind) {
      case NodeKind::Equal:
        return b_.constant((env_[nd.slots[0]] == env_[nd.slots[1]]) == positive);
      case NodeKind::NumAtom: {
        std::vector<int> pos;
        for (int s : nd.slots) pos.push_back(env_[s]);
        return b_.constant(nd.pred->holds(pos) == positive);
      }
      case NodeKind::Atom: {
        std::vector<int> pos;
        for (int s : nd.slots) pos.push_back(env_[s]);
        const std::size_t bit = layout_.relation_bit(static_cast<std::size_t>(nd.rel), pos);
        return b_.literal(static_cast<int>(bit) + 1, !positive);
      }
      case NodeKind::Not:
        return gate(nd.children[0], !positive);
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<int> args;
        for (int c : nd.children) args.push_back(gate(c, positive));
        const bool conj = (nd.kind == NodeKind::And) == positive;
        return conj ? b_.and_of(std::move(args)) : b_.or_of(std::move(args));
      }
      case NodeKind::Exists:
      case NodeKind::Forall: {
        std::vector<int> args = children_over_universe(nd, positive);
        const bool disj = (nd.kind == NodeKind::Exists) == positive;
        return disj ? b_.or_of(std::move(args)) : b_.and_of(std::move(args));
      }
      case NodeKind::ModExists: {
        std::vector<int> args = children_over_universe(nd, true);
        const int p = nd.modulus;
        auto padded = [&](int residue) {
          std::vector<int> a = args;
          a.insert(a.end(), static_cast<std::size_t>((p - residue) % p), b_.constant(true));
          return b_.mod_of(p, std::move(a));
        };
        if (positive) return padded(nd.residue);
        std::vector<int> alternatives;
        for (int j = 0; j < p; ++j)
          if (j != nd.residue) alternatives.push_back(padded(j));
        return b_.or_of(std::move(alternatives));
      }
    }
    return b_.constant(false);
  }

  std::vector<int> children_over_universe(const logic::ResolvedNode& nd, bool positive) {
    std::vector<int> args;
    const int saved = env_[nd.bound];
    for (int a = 0; a < n_; ++a) {
      env_[nd.bound] = a;
      args.push_back(gate(nd.children[0], positive));
    }
    env_[nd.bound] = saved;
    return args;
  }

  const logic::ResolvedFormula& rf_;
  const RepLayout& layout_;
  CircuitBuilder& b_;
  int n_;
  std::vector<int> env_;
  std::map<std::vector<int>, int> memo_;
};

}  // namespace

Circuit compile(const logic::FormulaPtr& phi, const Signature& sig, int n,
                const std::vector<std::string>& free_order, const logic::NumericVocabulary& vocab) {
  const int K = static_cast<int>(free_order.size());
  RepLayout layout(sig, n, K);
  logic::ResolvedFormula rf = logic::resolve(*phi, sig, vocab, free_order);
  CircuitBuilder b(static_cast<int>(layout.length()));
  Compiler comp(rf, layout, b);

  const std::vector<int> used = rf.nodes[rf.root].free_slots;  // subset of 0..K-1
  if (used.empty()) return b.build(comp.gate(rf.root, true));

  // one disjunct per assignment of the free variables that occur in phi
  std::vector<int> alternatives;
  std::vector<int> value(used.size(), 0);
  for (;;) {
    std::vector<int> conj;
    for (std::size_t i = 0; i < used.size(); ++i) {
      comp.env()[used[i]] = value[i];
      conj.push_back(b.input(static_cast<int>(layout.anchor_bit(used[i], value[i])) + 1));
    }
    conj.push_back(comp.gate(rf.root, true));
    alternatives.push_back(b.and_of(std::move(conj)));
    std::size_t i = 0;
    while (i < used.size() && ++value[i] == n) value[i++] = 0;
    if (i == used.size()) break;
  }
  return b.build(b.or_of(std::move(alternatives)));
}

}  // namespace modloc::circuit
