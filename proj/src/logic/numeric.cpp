#include "modloc/numeric.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "modloc/errors.hpp"

namespace modloc::logic {

NumericVocabulary NumericVocabulary::builtin() {
  NumericVocabulary v;
  v.add({"num<", 2, [](std::span<const int> a) { return a[0] < a[1]; }});
  v.add({"num+", 3, [](std::span<const int> a) { return a[0] + a[1] == a[2]; }});
  v.add({"num*", 3, [](std::span<const int> a) {
           return static_cast<long long>(a[0]) * a[1] == a[2];
         }});
  v.add({"numbit", 2, [](std::span<const int> a) { return a[1] < 31 && ((a[0] >> a[1]) & 1) != 0; }});
  return v;
}

void NumericVocabulary::add(NumericalPredicate p) {
  if (p.arity < 1) throw SymbolError("numerical predicate " + p.name + " needs arity >= 1");
  std::string name = p.name;
  preds_[name] = std::move(p);
}

void NumericVocabulary::add_table(const std::string& name, int arity,
                                  std::vector<std::vector<int>> tuples) {
  for (const auto& t : tuples)
    if (static_cast<int>(t.size()) != arity)
      throw SymbolError("table " + name + " has a tuple of wrong arity");
  auto table = std::make_shared<std::set<std::vector<int>>>(tuples.begin(), tuples.end());
  add({name, arity, [table](std::span<const int> a) {
         return table->count(std::vector<int>(a.begin(), a.end())) > 0;
       }});
}

const NumericalPredicate* NumericVocabulary::find(const std::string& name) const {
  auto it = preds_.find(name);
  return it == preds_.end() ? nullptr : &it->second;
}

std::vector<std::string> NumericVocabulary::names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : preds_) out.push_back(k);
  return out;
}

}  // namespace modloc::logic
