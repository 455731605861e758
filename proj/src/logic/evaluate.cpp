#include <algorithm>
#include <array>

#include "modloc/errors.hpp"
#include "modloc/evaluate.hpp"
#include "modloc/permutation.hpp"

namespace modloc::logic {

Embedding Embedding::identity(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return Embedding(std::move(p));
}

Embedding::Embedding(std::vector<int> positions) : pos_(std::move(positions)) {
  if (!is_permutation_of_range(pos_)) throw PreconditionError("embedding is not a bijection onto [n]");
}

bool Embedding::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (pos_[i] != i) return false;
  return true;
}

std::string Embedding::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pos_[i]);
  }
  return out + "]";
}

namespace {

class Run {
 public:
  Run(const ResolvedFormula& rf, const Structure& s, const Embedding& e)
      : rf_(rf), s_(s), e_(e), n_(s.size()), env_(rf.slot_count, 0) {}

  std::vector<int>& env() { return env_; }

  bool eval(int id) {
    const ResolvedNode& nd = rf_.nodes[id];
    switch (nd.kind) {
      case NodeKind::Equal:
        return env_[nd.slots[0]] == env_[nd.slots[1]];
      case NodeKind::Atom: {
        std::array<Element, 16> small;
        if (nd.slots.size() <= small.size()) {
          for (std::size_t k = 0; k < nd.slots.size(); ++k) small[k] = env_[nd.slots[k]];
          return s_.holds(nd.rel, std::span<const Element>(small.data(), nd.slots.size()));
        }
        std::vector<Element> big(nd.slots.size());
        for (std::size_t k = 0; k < nd.slots.size(); ++k) big[k] = env_[nd.slots[k]];
        return s_.holds(nd.rel, big);
      }
      case NodeKind::NumAtom: {
        std::array<int, 16> small;
        if (nd.slots.size() <= small.size()) {
          for (std::size_t k = 0; k < nd.slots.size(); ++k) small[k] = e_[env_[nd.slots[k]]];
          return nd.pred->holds(std::span<const int>(small.data(), nd.slots.size()));
        }
        std::vector<int> pos(nd.slots.size());
        for (std::size_t k = 0; k < nd.slots.size(); ++k) pos[k] = e_[env_[nd.slots[k]]];
        return nd.pred->holds(pos);
      }
      case NodeKind::Not:
        return !eval(nd.children[0]);
      case NodeKind::And:
        for (int c : nd.children)
          if (!eval(c)) return false;
        return true;
      case NodeKind::Or:
        for (int c : nd.children)
          if (eval(c)) return true;
        return false;
      case NodeKind::Exists:
        for (int a = 0; a < n_; ++a) {
          env_[nd.bound] = a;
          if (eval(nd.children[0])) return true;
        }
        return false;
      case NodeKind::Forall:
        for (int a = 0; a < n_; ++a) {
          env_[nd.bound] = a;
          if (!eval(nd.children[0])) return false;
        }
        return true;
      case NodeKind::ModExists: {
        int count = 0;
        for (int a = 0; a < n_; ++a) {
          env_[nd.bound] = a;
          if (eval(nd.children[0])) count = (count + 1) % nd.modulus;
        }
        return count == nd.residue;
      }
    }
    return false;
  }

 private:
  const ResolvedFormula& rf_;
  const Structure& s_;
  const Embedding& e_;
  int n_;
  std::vector<int> env_;
};

}  // namespace

Evaluator::Evaluator(FormulaPtr f, const Signature& sig, NumericVocabulary vocab)
    : Evaluator(f, sig, std::move(vocab), free_variables(*f)) {}

Evaluator::Evaluator(FormulaPtr f, const Signature& sig, NumericVocabulary vocab,
                     std::vector<std::string> free_order)
    : formula_(std::move(f)),
      vocab_(std::make_shared<const NumericVocabulary>(std::move(vocab))),
      free_order_(std::move(free_order)) {
  resolved_ = std::make_shared<const ResolvedFormula>(resolve(*formula_, sig, *vocab_, free_order_));
}

bool Evaluator::operator()(const Structure& s, const Embedding& e,
                           std::span<const Element> values) const {
  if (values.size() != free_order_.size())
    throw EvalError("expected " + std::to_string(free_order_.size()) + " free-variable values");
  if (e.size() != s.size()) throw PreconditionError("embedding size differs from universe size");
  Run run(*resolved_, s, e);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= s.size()) throw EvalError("assigned element out of range");
    run.env()[i] = values[i];
  }
  return run.eval(resolved_->root);
}

bool Evaluator::operator()(const Structure& s, const Embedding& e, const Assignment& a) const {
  std::vector<Element> values;
  for (const auto& v : free_order_) {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("unbound variable " + v);
    values.push_back(it->second);
  }
  return (*this)(s, e, values);
}

bool eval(const Structure& s, const Embedding& e, const FormulaPtr& f, const Assignment& a,
          const NumericVocabulary& vocab) {
  return Evaluator(f, s.signature(), vocab)(s, e, a);
}

}  // namespace modloc::logic
