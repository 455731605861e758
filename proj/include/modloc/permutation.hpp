#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace modloc {

// Permutations of [n] as images: p[i] is the image of i.

std::uint64_t inversion_count(std::span<const int> p);
std::vector<int> cycle_lengths(std::span<const int> p);
bool is_permutation_of_range(std::span<const int> p);

}  // namespace modloc
