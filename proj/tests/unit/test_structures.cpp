#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "modloc/errors.hpp"
#include "modloc/gaifman.hpp"
#include "modloc/generators.hpp"
#include "modloc/isomorphism.hpp"
#include "modloc/permutation.hpp"
#include "modloc/rng.hpp"
#include "modloc/structure.hpp"

using namespace modloc;

namespace {

Structure digraph(int n, std::vector<Tuple> edges) { return Structure(Signature::parse("E/2"), n, {std::move(edges)}); }

Structure random_structure(Rng& rng, int n) {
  std::vector<Tuple> e, p;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (rng.below(3) == 0) e.push_back({a, b});
    if (rng.coin()) p.push_back({a});
  }
  return Structure(Signature::parse("E/2 P/1"), n, {e, p});
}

// Anchor-fixing permutation search over all n! bijections.
bool iso_bruteforce(const AnchoredNeighborhood& a, const AnchoredNeighborhood& b) {
  const int n = a.structure.size();
  if (n != b.structure.size() || a.anchor.size() != b.anchor.size()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.anchor.size() && ok; ++i) ok = p[a.anchor[i]] == b.anchor[i];
    for (std::size_t r = 0; r < a.structure.signature().size() && ok; ++r) {
      ok = a.structure.tuples(r).size() == b.structure.tuples(r).size();
      for (const auto& t : a.structure.tuples(r)) {
        if (!ok) break;
        Tuple img;
        for (Element x : t) img.push_back(p[x]);
        ok = b.structure.holds(r, img);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("signature parsing and printing") {
  const Signature sig = Signature::parse("E/2 P0/1");
  CHECK(sig.size() == 2);
  CHECK(sig[0] == RelationSymbol{"E", 2});
  CHECK(sig.index_of("P0") == 1);
  CHECK_FALSE(sig.find("Q").has_value());
  CHECK(sig.to_string() == "E/2 P0/1");
  CHECK_THROWS_AS(Signature::parse("E/x"), ParseError);
}

TEST_CASE("tuples are sorted and deduplicated") {
  const Structure s = digraph(3, {{2, 0}, {0, 1}, {2, 0}});
  CHECK(s.tuples("E") == std::vector<Tuple>{{0, 1}, {2, 0}});
  CHECK(s.holds(0, {2, 0}));
  CHECK_FALSE(s.holds(0, {0, 2}));
  CHECK(s.tuple_count() == 2);
  CHECK_THROWS_AS(digraph(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("text roundtrip") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Structure s = random_structure(rng, 1 + static_cast<int>(rng.below(6)));
    CHECK(parse_structure(to_text(s)) == s);
  }
  const auto both = parse_structures(to_text(digraph(2, {{0, 1}})) + "---\n" + to_text(digraph(1, {})));
  REQUIRE(both.size() == 2);
  CHECK(both[1].size() == 1);
}

TEST_CASE("missing relation line means empty relation") {
  const Structure s = parse_structure("signature: E/2 P/1\nuniverse: 2\nE: (0,1)\n");
  CHECK(s.tuples("P").empty());
}

TEST_CASE("malformed structure text") {
  CHECK_THROWS_AS(parse_structure("signature: E/2\nuniverse: 2\nE: (0,5)\n"), Error);
  CHECK_THROWS_AS(parse_structure("universe: 2\n"), Error);
  CHECK_THROWS_AS(parse_structure("signature: E/2\nuniverse: 2\nE: (0,1,1)\n"), Error);
}

TEST_CASE("string structure over a declared alphabet") {
  const Structure s = gen::string_structure("ab");
  CHECK(s.tuples("E") == std::vector<Tuple>{{0, 1}});
  CHECK(s.tuples("Pa") == std::vector<Tuple>{{0}});
  CHECK(s.tuples("Pb") == std::vector<Tuple>{{1}});
}

TEST_CASE("gaifman graph") {
  const GaifmanGraph g(digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK(GaifmanGraph(digraph(3, {})).edge_count() == 0);

  const auto hose = gen::hose(3, 4);
  CHECK(gaifman_graph(hose.structure).adjacent(hose.a, hose.b));
}

TEST_CASE("distances") {
  const auto d = distances_from(digraph(3, {{0, 1}, {1, 2}}), Tuple{0});
  CHECK(d == std::vector<Distance>{0, 1, 2});

  const Structure two = gen::cycles({3, 3});
  const auto d2 = distances_from(two, Tuple{0});
  for (int x = 3; x < 6; ++x) CHECK_FALSE(d2[x].has_value());

  const auto dt = distances_from(gen::torus({3, 4, 0}), Tuple{0});
  int far = 0;
  for (const auto& x : dt) far = std::max(far, x.value());
  CHECK(far <= 3);
}

TEST_CASE("disjoint union keeps parts apart") {
  const Structure u = disjoint_union(gen::cycles({2}), gen::cycles({2}));
  CHECK(u.size() == 4);
  CHECK(u.tuples("E") == std::vector<Tuple>{{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  const Structure plus = disjoint_union(gen::cycles({3}), digraph(1, {}));
  CHECK(plus.size() == 4);
  CHECK(plus.tuples("E").size() == 3);

  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Structure a = random_structure(rng, 1 + static_cast<int>(rng.below(4)));
    const Structure b = random_structure(rng, 1 + static_cast<int>(rng.below(4)));
    const Structure ab = disjoint_union(a, b);
    for (int x = 0; x < a.size(); ++x) {
      const auto d = distances_from(ab, Tuple{x});
      for (int y = a.size(); y < ab.size(); ++y) CHECK_FALSE(d[y].has_value());
    }
  }
}

TEST_CASE("neighborhood contains exactly the ball") {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Structure s = random_structure(rng, n);
    // reachability matrix powers over the symmetrized relation
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& t : s.tuples("E"))
      if (t[0] != t[1]) adj[t[0]][t[1]] = adj[t[1]][t[0]] = true;
    const Element a = static_cast<Element>(rng.below(n));
    const int r = static_cast<int>(rng.below(4));
    std::vector<bool> within(n, false);
    within[a] = true;
    for (int step = 0; step < r; ++step) {
      auto next = within;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (within[x] && adj[x][y]) next[y] = true;
      within = next;
    }
    std::vector<Element> expected;
    for (int x = 0; x < n; ++x)
      if (within[x]) expected.push_back(x);
    const auto nb = neighborhood(s, Tuple{a}, r);
    CHECK(nb.index_map == expected);
    CHECK(nb.structure.size() == static_cast<int>(expected.size()));
  }
}

TEST_CASE("radius zero in an edgeless structure") {
  const auto nb = neighborhood(digraph(4, {}), Tuple{2}, 0);
  CHECK(nb.structure.size() == 1);
  CHECK(nb.anchor == Tuple{0});
}

TEST_CASE("string witness neighborhoods are disjoint") {
  const Structure s = gen::string_structure(gen::w_ell(3));
  const auto a = neighborhood(s, Tuple{2}, 2), b = neighborhood(s, Tuple{8}, 2);
  std::vector<Element> both;
  std::set_intersection(a.index_map.begin(), a.index_map.end(), b.index_map.begin(), b.index_map.end(),
                        std::back_inserter(both));
  CHECK(both.empty());
  CHECK(isomorphic(a, b));
}

TEST_CASE("isomorphism basics") {
  const Structure p2 = digraph(3, {{0, 1}, {1, 2}});
  const Structure p3 = digraph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(isomorphic(anchored(p2, Tuple{0}), anchored(p2, Tuple{0})));
  CHECK_FALSE(isomorphic(anchored(p2, Tuple{0}), anchored(p3, Tuple{0})));
  CHECK_FALSE(isomorphic(anchored(p2, Tuple{0}), anchored(p2, Tuple{2})));

  const auto hose = gen::hose(3, 4);
  CHECK(isomorphic(neighborhood(hose.structure, Tuple{hose.a}, 2), neighborhood(hose.structure, Tuple{hose.b}, 2)));
  const auto h23 = gen::hose(2, 3);
  CHECK(isomorphic(neighborhood(h23.structure, Tuple{h23.a}, 1), neighborhood(h23.structure, Tuple{h23.b}, 1)));
}

TEST_CASE("canonical form of relabelings and non-isomorphic shapes") {
  const Structure path = digraph(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<Element> perm{2, 0, 3, 1};
  const Structure moved = relabel(path, perm);
  CHECK(canonical_form(path, Tuple{1}) == canonical_form(moved, Tuple{perm[1]}));
  const Structure cycle = digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(canonical_form(path, Tuple{}) != canonical_form(cycle, Tuple{}));
}

TEST_CASE("canonical form equality is isomorphism (n <= 6)") {
  Rng rng(77);
  CanonicalCache cache;
  int equal = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Structure a = random_structure(rng, n);
    // half of the pairs are relabelings, which share a code
    const Structure b = rng.coin() ? relabel(a, rng.permutation(n)) : random_structure(rng, n);
    Tuple ta, tb;
    const int k = static_cast<int>(rng.below(3));
    for (int j = 0; j < k; ++j) {
      ta.push_back(static_cast<Element>(rng.below(n)));
      tb.push_back(static_cast<Element>(rng.below(n)));
    }
    const auto na = anchored(a, ta), nb = anchored(b, tb);
    const bool iso = iso_bruteforce(na, nb);
    CHECK((canonical_form(na) == canonical_form(nb)) == iso);
    CHECK((cache.code(na) == cache.code(nb)) == iso);
    CHECK(isomorphic(na, nb) == iso);
    equal += iso;
  }
  CHECK(equal > 20);
}

TEST_CASE("isomorphism is an equivalence on random samples") {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Structure a = random_structure(rng, n);
    const Structure b = relabel(a, rng.permutation(n));
    const Structure c = relabel(b, rng.permutation(n));
    const auto na = anchored(a, Tuple{}), nb = anchored(b, Tuple{}), nc = anchored(c, Tuple{});
    CHECK(isomorphic(na, na));
    CHECK(isomorphic(na, nb) == isomorphic(nb, na));
    CHECK(isomorphic(na, nc));
  }
}

TEST_CASE("permutation helpers") {
  const std::vector<int> p{1, 0, 3, 2};
  CHECK(inversion_count(p) == 2);
  auto lengths = cycle_lengths(p);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{2, 2});
  CHECK(is_permutation_of_range(p));
  CHECK_FALSE(is_permutation_of_range(std::vector<int>{0, 0}));
}

}  // TEST_SUITE
