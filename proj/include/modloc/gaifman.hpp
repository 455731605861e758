#pragma once

#include <optional>
#include <span>
#include <vector>

#include "modloc/structure.hpp"

namespace modloc {

// Gaifman distance; std::nullopt is the unreachable (infinite) distance.
using Distance = std::optional<int>;

class GaifmanGraph {
 public:
  explicit GaifmanGraph(const Structure& s);

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<Element>& neighbors(Element a) const { return adj_[a]; }
  bool adjacent(Element a, Element b) const;
  std::size_t edge_count() const;

 private:
  std::vector<std::vector<Element>> adj_;
};

GaifmanGraph gaifman_graph(const Structure& s);

std::vector<Distance> distances_from(const GaifmanGraph& g, std::span<const Element> anchor);
std::vector<Distance> distances_from(const Structure& s, std::span<const Element> anchor);

// Sorted elements at distance <= r from the anchor.
std::vector<Element> ball(const GaifmanGraph& g, std::span<const Element> anchor, int r);

struct AnchoredNeighborhood {
  Structure structure;
  Tuple anchor;                    // local indices
  int radius = 0;                  // -1 when the whole structure is taken
  std::vector<Element> index_map;  // local -> original
};

AnchoredNeighborhood neighborhood(const Structure& s, std::span<const Element> anchor, int r);
AnchoredNeighborhood neighborhood(const Structure& s, const GaifmanGraph& g,
                                  std::span<const Element> anchor, int r);

// The full structure with an anchor attached (radius -1).
AnchoredNeighborhood anchored(const Structure& s, std::span<const Element> anchor);

}  // namespace modloc
