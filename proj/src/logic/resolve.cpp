#include <algorithm>

#include "modloc/errors.hpp"
#include "modloc/evaluate.hpp"

namespace modloc::logic {

namespace {

class Resolver {
 public:
  Resolver(const Signature& sig, const NumericVocabulary& vocab) : sig_(sig), vocab_(vocab) {}

  ResolvedFormula run(const Formula& f, const std::vector<std::string>& free_order) {
    for (const auto& v : free_order) {
      if (std::find(out_.slot_names.begin(), out_.slot_names.end(), v) != out_.slot_names.end())
        throw PreconditionError("variable " + v + " listed twice in the free-variable order");
      scope_.push_back({v, new_slot(v)});
    }
    out_.root = visit(f);
    return std::move(out_);
  }

 private:
  int new_slot(const std::string& name) {
    out_.slot_names.push_back(name);
    return out_.slot_count++;
  }

  int lookup(const std::string& v) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == v) return it->second;
    throw EvalError("unbound variable " + v);
  }

  int visit(const Formula& f) {
    ResolvedNode n;
    n.kind = f.kind;
    switch (f.kind) {
      case NodeKind::Atom: {
        auto idx = sig_.find(f.symbol);
        if (!idx) throw SymbolError("unknown relation symbol " + f.symbol);
        if (static_cast<int>(f.args.size()) != sig_[*idx].arity)
          throw SymbolError("arity mismatch for " + f.symbol);
        n.rel = static_cast<int>(*idx);
        break;
      }
      case NodeKind::NumAtom: {
        n.pred = vocab_.find(f.symbol);
        if (!n.pred) throw SymbolError("unknown numerical predicate " + f.symbol);
        if (static_cast<int>(f.args.size()) != n.pred->arity)
          throw SymbolError("arity mismatch for " + f.symbol);
        break;
      }
      case NodeKind::Equal:
        if (f.args.size() != 2) throw SymbolError("'=' takes two variables");
        break;
      case NodeKind::ModExists:
        if (f.modulus < 2 || f.residue < 0 || f.residue >= f.modulus)
          throw PreconditionError("invalid modulo quantifier");
        n.residue = f.residue;
        n.modulus = f.modulus;
        break;
      default:
        break;
    }
    for (const auto& v : f.args) n.slots.push_back(lookup(v));
    n.free_slots = n.slots;

    const bool quant =
        f.kind == NodeKind::Exists || f.kind == NodeKind::Forall || f.kind == NodeKind::ModExists;
    if (quant) {
      n.bound = new_slot(f.bound);
      scope_.push_back({f.bound, n.bound});
    }
    for (const auto& c : f.children) {
      int id = visit(*c);
      n.children.push_back(id);
      const auto& cf = out_.nodes[id].free_slots;
      n.free_slots.insert(n.free_slots.end(), cf.begin(), cf.end());
    }
    if (quant) {
      scope_.pop_back();
      n.free_slots.erase(std::remove(n.free_slots.begin(), n.free_slots.end(), n.bound),
                         n.free_slots.end());
    }
    std::sort(n.free_slots.begin(), n.free_slots.end());
    n.free_slots.erase(std::unique(n.free_slots.begin(), n.free_slots.end()), n.free_slots.end());
    out_.nodes.push_back(std::move(n));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  const Signature& sig_;
  const NumericVocabulary& vocab_;
  std::vector<std::pair<std::string, int>> scope_;
  ResolvedFormula out_;
};

}  // namespace

ResolvedFormula resolve(const Formula& f, const Signature& sig, const NumericVocabulary& vocab,
                        const std::vector<std::string>& free_order) {
  return Resolver(sig, vocab).run(f, free_order);
}

}  // namespace modloc::logic
