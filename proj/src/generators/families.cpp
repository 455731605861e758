#include "modloc/errors.hpp"
#include "modloc/generators.hpp"

namespace modloc::gen {

namespace {

Structure digraph(int n, std::vector<Tuple> edges) {
  return Structure(Signature({{"E", 2}}), n, {std::move(edges)});
}

}  // namespace

Structure cycles(const std::vector<int>& lengths) {
  int n = 0;
  std::vector<Tuple> edges;
  for (int len : lengths) {
    if (len < 1) throw PreconditionError("cycle lengths must be positive");
    for (int i = 0; i < len; ++i) edges.push_back({n + i, n + (i + 1) % len});
    n += len;
  }
  if (n == 0) throw PreconditionError("need at least one cycle");
  return digraph(n, std::move(edges));
}

Structure permutation_structure(const std::vector<int>& perm) {
  std::vector<Tuple> edges;
  for (std::size_t a = 0; a < perm.size(); ++a) edges.push_back({static_cast<int>(a), perm[a]});
  return digraph(static_cast<int>(perm.size()), std::move(edges));
}

Structure subdivide(int nodes, const std::vector<std::pair<int, int>>& edges, const std::vector<bool>& marked,
                    int ell) {
  if (ell < 0) throw PreconditionError("subdivision factor must be non-negative");
  if (marked.size() != edges.size()) throw PreconditionError("one mark per edge required");
  int n = nodes;
  std::vector<Tuple> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (!marked[e]) {
      out.push_back({u, v});
      continue;
    }
    int prev = u;
    for (int s = 0; s < ell; ++s) {
      out.push_back({prev, n});
      prev = n++;
    }
    out.push_back({prev, v});
  }
  return digraph(n, std::move(out));
}

ShiftFamily reach_family(int t, int ell) {
  if (t < 2 || ell < 1) throw PreconditionError("reach family needs t >= 2, l >= 1");
  const int n = t * (2 * ell + 1);
  std::vector<Tuple> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  std::vector<Element> anchors;
  for (int i = 0; i < t; ++i) anchors.push_back(i * (2 * ell + 1) + ell);
  return {"reach", digraph(n, std::move(edges)), anchors, ell};
}

ShiftFamily cycle_family(int t, int ell) {
  if (t < 2 || ell < 1) throw PreconditionError("cycle family needs t >= 2, l >= 1");
  // u0 = 0, u1 = 1, v_i = 2 + i
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 0}};
  for (int i = 0; i < t; ++i) edges.push_back({2 + i, 3 + i});
  std::vector<Element> anchors{0};
  for (int i = 1; i < t; ++i) anchors.push_back(2 + i);
  return {"cycle", subdivide(t + 3, edges, std::vector<bool>(edges.size(), true), ell), anchors, ell / 2};
}

ShiftFamily triangle_reach_family(int t, int ell) {
  if (t < 2 || ell < 1) throw PreconditionError("triangle-reach family needs t >= 2, l >= 1");
  // v_i = i for i in 0..t+4
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> marked;
  for (int i = 0; i < t; ++i) {
    edges.push_back({i, i + 1});
    marked.push_back(true);
  }
  for (auto e : {std::pair{t, t + 1}, std::pair{t + 1, t + 2}, std::pair{t + 2, t}}) {
    edges.push_back(e);
    marked.push_back(false);
  }
  edges.push_back({t + 2, t + 3});
  edges.push_back({t + 3, t + 4});
  marked.push_back(true);
  marked.push_back(true);
  std::vector<Element> anchors;
  for (int i = 0; i < t - 1; ++i) anchors.push_back(i + 1);
  anchors.push_back(t + 3);
  return {"triangle-reach", subdivide(t + 5, edges, marked, ell), anchors, ell / 2};
}

ShiftFamily same_distance_family(int t, int ell) {
  if (t < 3 || ell < 1) throw PreconditionError("same-distance family needs t >= 3, l >= 1");
  // u = 0, v_i = 1 + i for i in 0..t
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> marked;
  for (int i = 0; i < t; ++i) {
    edges.push_back({0, 1 + i});
    marked.push_back(true);
  }
  edges.push_back({t, t + 1});
  marked.push_back(false);
  std::vector<Element> anchors;
  for (int i = 0; i < t - 1; ++i) anchors.push_back(1 + i);
  anchors.push_back(t + 1);
  return {"same-distance", subdivide(t + 2, edges, marked, ell), anchors, ell};
}

}  // namespace modloc::gen
