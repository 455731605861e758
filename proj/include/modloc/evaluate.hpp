#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "modloc/formula.hpp"
#include "modloc/numeric.hpp"
#include "modloc/structure.hpp"

namespace modloc::logic {

// Bijection universe -> {0..n-1}; positions()[a] is the numeric position of a.
class Embedding {
 public:
  static Embedding identity(int n);
  explicit Embedding(std::vector<int> positions);

  int operator[](Element a) const { return pos_[a]; }
  int size() const { return static_cast<int>(pos_.size()); }
  const std::vector<int>& positions() const { return pos_; }
  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Embedding&) const = default;

 private:
  std::vector<int> pos_;
};

using Assignment = std::map<std::string, Element>;

// Formula with variables resolved to slots and symbols resolved to indices.
// Slots 0..k-1 hold the free variables in the requested order.
struct ResolvedNode {
  NodeKind kind;
  int rel = -1;
  const NumericalPredicate* pred = nullptr;
  std::vector<int> slots;
  std::vector<int> children;
  int bound = -1;
  int residue = 0;
  int modulus = 0;
  std::vector<int> free_slots;  // sorted
};

struct ResolvedFormula {
  std::vector<ResolvedNode> nodes;
  int root = -1;
  int slot_count = 0;
  std::vector<std::string> slot_names;
};

ResolvedFormula resolve(const Formula& f, const Signature& sig, const NumericVocabulary& vocab,
                        const std::vector<std::string>& free_order);

class Evaluator {
 public:
  Evaluator(FormulaPtr f, const Signature& sig,
            NumericVocabulary vocab = NumericVocabulary::builtin());
  Evaluator(FormulaPtr f, const Signature& sig, NumericVocabulary vocab,
            std::vector<std::string> free_order);

  const std::vector<std::string>& free_order() const { return free_order_; }
  const ResolvedFormula& resolved() const { return *resolved_; }
  const FormulaPtr& formula() const { return formula_; }
  const NumericVocabulary& vocabulary() const { return *vocab_; }

  bool operator()(const Structure& s, const Embedding& e, std::span<const Element> values) const;
  bool operator()(const Structure& s, const Embedding& e, const Assignment& a) const;

 private:
  FormulaPtr formula_;
  std::shared_ptr<const NumericVocabulary> vocab_;
  std::vector<std::string> free_order_;
  std::shared_ptr<const ResolvedFormula> resolved_;
};

bool eval(const Structure& s, const Embedding& e, const FormulaPtr& f, const Assignment& a,
          const NumericVocabulary& vocab = NumericVocabulary::builtin());

}  // namespace modloc::logic
