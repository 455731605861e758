#include "modloc/gaifman.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "modloc/errors.hpp"

namespace modloc {

GaifmanGraph::GaifmanGraph(const Structure& s) : adj_(s.size()) {
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const auto& t : s.tuples(r)) {
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
          if (t[i] != t[j]) adj_[t[i]].push_back(t[j]);
    }
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool GaifmanGraph::adjacent(Element a, Element b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::size_t GaifmanGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& nb : adj_) c += nb.size();
  return c / 2;
}

GaifmanGraph gaifman_graph(const Structure& s) { return GaifmanGraph(s); }

std::vector<Distance> distances_from(const GaifmanGraph& g, std::span<const Element> anchor) {
  if (anchor.empty()) throw PreconditionError("distances need a non-empty anchor");
  std::vector<Distance> dist(g.size());
  std::deque<Element> queue;
  for (Element a : anchor) {
    if (a < 0 || a >= g.size()) throw PreconditionError("anchor element out of range");
    if (!dist[a]) {
      dist[a] = 0;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Distance> distances_from(const Structure& s, std::span<const Element> anchor) {
  return distances_from(GaifmanGraph(s), anchor);
}

std::vector<Element> ball(const GaifmanGraph& g, std::span<const Element> anchor, int r) {
  if (r < 0) throw PreconditionError("radius must be non-negative");
  auto dist = distances_from(g, anchor);
  std::vector<Element> out;
  for (int b = 0; b < g.size(); ++b)
    if (dist[b] && *dist[b] <= r) out.push_back(b);
  return out;
}

AnchoredNeighborhood neighborhood(const Structure& s, const GaifmanGraph& g,
                                  std::span<const Element> anchor, int r) {
  auto members = ball(g, anchor, r);
  std::vector<int> local(s.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  Tuple a;
  for (Element e : anchor) a.push_back(local[e]);
  return {induced_substructure(s, members), std::move(a), r, std::move(members)};
}

AnchoredNeighborhood neighborhood(const Structure& s, std::span<const Element> anchor, int r) {
  return neighborhood(s, GaifmanGraph(s), anchor, r);
}

AnchoredNeighborhood anchored(const Structure& s, std::span<const Element> anchor) {
  for (Element e : anchor)
    if (e < 0 || e >= s.size()) throw PreconditionError("anchor element out of range");
  std::vector<Element> ids(s.size());
  std::iota(ids.begin(), ids.end(), 0);
  return {s, Tuple(anchor.begin(), anchor.end()), -1, std::move(ids)};
}

}  // namespace modloc
