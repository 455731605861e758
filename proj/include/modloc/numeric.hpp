#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace modloc::logic {

// A relation on natural numbers. Evaluated on embedding positions, never on
// structure elements.
struct NumericalPredicate {
  std::string name;
  int arity = 0;
  std::function<bool(std::span<const int>)> holds;
};

class NumericVocabulary {
 public:
  // num< num+ num* numbit
  static NumericVocabulary builtin();

  void add(NumericalPredicate p);
  // Finite table: holds exactly on the listed tuples.
  void add_table(const std::string& name, int arity, std::vector<std::vector<int>> tuples);

  const NumericalPredicate* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, NumericalPredicate> preds_;
};

}  // namespace modloc::logic
