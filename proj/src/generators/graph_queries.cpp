#include "modloc/graph_queries.hpp"

#include <deque>
#include <string>

#include "modloc/errors.hpp"
#include "modloc/gaifman.hpp"

namespace modloc::gen {

using logic::QueryRelation;

namespace {

// reach[a][b]: directed path from a to b of length >= 0
std::vector<std::vector<char>> reachability(const Structure& s) {
  const int n = s.size();
  const std::size_t e = s.signature().index_of("E");
  std::vector<std::vector<Element>> out(n);
  for (const auto& t : s.tuples(e)) out[t[0]].push_back(t[1]);
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    std::deque<Element> queue{a};
    reach[a][a] = 1;
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (Element y : out[x])
        if (!reach[a][y]) {
          reach[a][y] = 1;
          queue.push_back(y);
        }
    }
  }
  return reach;
}

template <class Pred>
QueryRelation collect(int t, int n, Pred&& pred) {
  if (t < 1) throw PreconditionError("query arity must be positive");
  QueryRelation q(t, n);
  for (std::size_t i = 0; i < q.capacity(); ++i) {
    Tuple x = q.tuple_at(i);
    if (pred(x)) q.insert(x);
  }
  return q;
}

}  // namespace

QueryRelation reach_chain_query(const Structure& s, int t) {
  auto reach = reachability(s);
  return collect(t, s.size(), [&](const Tuple& x) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (!reach[x[i]][x[i + 1]]) return false;
    return true;
  });
}

QueryRelation cycle_query(const Structure& s, int t) {
  auto reach = reachability(s);
  const std::size_t e = s.signature().index_of("E");
  std::vector<char> on_cycle(s.size(), 0);
  for (const auto& edge : s.tuples(e))
    if (reach[edge[1]][edge[0]]) on_cycle[edge[0]] = 1;
  return collect(t, s.size(), [&](const Tuple& x) { return on_cycle[x[0]] != 0; });
}

QueryRelation triangle_reach_query(const Structure& s, int t) {
  auto reach = reachability(s);
  const std::size_t e = s.signature().index_of("E");
  const int n = s.size();
  std::vector<char> target(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && b != c && a != c && s.holds(e, {a, b}) && s.holds(e, {b, c}) && s.holds(e, {c, a}))
          for (int y = 0; y < n; ++y)
            if (reach[a][y]) target[y] = 1;
  return collect(t, n, [&](const Tuple& x) { return target[x.back()] != 0; });
}

QueryRelation same_distance_query(const Structure& s, int t) {
  if (t < 3) throw PreconditionError("same-distance needs t >= 3");
  GaifmanGraph g(s);
  std::vector<std::vector<Distance>> dist;
  for (Element a = 0; a < s.size(); ++a) {
    Element anchor[1] = {a};
    dist.push_back(distances_from(g, anchor));
  }
  return collect(t, s.size(), [&](const Tuple& x) {
    return dist[x[t - 3]][x[t - 1]] == dist[x[t - 2]][x[t - 1]];
  });
}

QueryRelation graph_query(std::string_view name, const Structure& s, int t) {
  if (name == "reach") return reach_chain_query(s, t);
  if (name == "cycle") return cycle_query(s, t);
  if (name == "triangle-reach") return triangle_reach_query(s, t);
  if (name == "same-distance") return same_distance_query(s, t);
  throw SymbolError("unknown graph query '" + std::string(name) + "'");
}

}  // namespace modloc::gen
