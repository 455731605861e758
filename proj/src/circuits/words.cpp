#include "modloc/words.hpp"

#include <vector>

#include "modloc/errors.hpp"

namespace modloc {

PrimitiveRoot primitive_root(std::string_view word) {
  if (word.empty()) throw PreconditionError("primitive root of the empty word");
  const std::size_t n = word.size();
  // failure function: n - border is the shortest period
  std::vector<std::size_t> fail(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && word[i] != word[k]) k = fail[k];
    if (word[i] == word[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t period = n - fail[n];
  if (n % period != 0) period = n;
  return {std::string(word.substr(0, period)), static_cast<int>(n / period)};
}

}  // namespace modloc
