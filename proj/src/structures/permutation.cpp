#include "modloc/permutation.hpp"

#include <algorithm>

namespace modloc {

std::uint64_t inversion_count(std::span<const int> p) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[j] < p[i]) ++c;
  return c;
}

std::vector<int> cycle_lengths(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_permutation_of_range(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace modloc
