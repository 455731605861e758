#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "modloc/gaifman.hpp"

namespace modloc {

// Anchor-preserving isomorphism by backtracking with degree and label pruning.
// Returns the map from local indices of `a` to local indices of `b`.
std::optional<std::vector<Element>> find_isomorphism(const AnchoredNeighborhood& a,
                                                     const AnchoredNeighborhood& b);
bool isomorphic(const AnchoredNeighborhood& a, const AnchoredNeighborhood& b);

using CanonicalCode = std::string;

// Byte string that is equal for two anchored structures iff they are
// isomorphic (anchor fixed pointwise). Minimum of the relation bit encoding
// over a canonical search tree of anchor-fixing relabelings.
CanonicalCode canonical_form(const AnchoredNeighborhood& n);
CanonicalCode canonical_form(const Structure& s, std::span<const Element> anchor);

// Memoizes canonical_form on the raw (unrelabeled) encoding. Repeated
// neighborhood shapes are common in strings and tori.
class CanonicalCache {
 public:
  const CanonicalCode& code(const AnchoredNeighborhood& n);
  std::size_t size() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, CanonicalCode> memo_;
};

}  // namespace modloc
