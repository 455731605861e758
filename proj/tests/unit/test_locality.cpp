#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "modloc/errors.hpp"
#include "modloc/formulas.hpp"
#include "modloc/generators.hpp"
#include "modloc/graph_queries.hpp"
#include "modloc/isomorphism.hpp"
#include "modloc/locality.hpp"
#include "modloc/parser.hpp"
#include "modloc/rng.hpp"

using namespace modloc;
using namespace modloc::locality;

namespace {

QueryRelation unary_query(const Structure& s, const std::function<bool(Element)>& pred) {
  QueryRelation q(1, s.size());
  for (int x = 0; x < s.size(); ++x)
    if (pred(x)) q.insert(Tuple{x});
  return q;
}

QueryRelation formula_query(const Structure& s, const logic::FormulaPtr& f, std::vector<std::string> free) {
  logic::Evaluator ev(f, s.signature(), logic::NumericVocabulary::builtin(), std::move(free));
  return logic::query_eval(s, ev, logic::QueryPolicy::IdentityEmbedding);
}

std::string word_of(std::uint32_t bits, int len, const std::string& alphabet) {
  std::string w;
  const auto k = static_cast<std::uint32_t>(alphabet.size());
  for (int i = 0; i < len; ++i, bits /= k) w += alphabet[bits % k];
  return w;
}

}  // namespace

TEST_SUITE("locality") {

TEST_CASE("constant query has no violations") {
  const Structure s = gen::torus({3, 3, 1});
  const auto all = unary_query(s, [](Element) { return true; });
  for (int r = 0; r <= 2; ++r) {
    CHECK(gaifman_violations(all, s, r).empty());
    CHECK(weak_gaifman_violations(all, s, r).empty());
  }
}

TEST_CASE("hose violations") {
  const auto h = gen::hose(3, 4);
  const auto q = formula_query(h.structure, gen::hose_query(3), {"x"});
  const auto v = gaifman_violations(q, h.structure, 2);
  CHECK(std::find(v.begin(), v.end(), PairViolation{{h.a}, {h.b}, true}) != v.end());
  for (const auto& x : v) CHECK(reverify(x, q, h.structure, 2, false));
  CHECK(weak_gaifman_violations(q, h.structure, 2).empty());
}

TEST_CASE("star centers with an even number of rays") {
  // centers 0 (4 rays) and 5 (5 rays) in one structure
  std::vector<Tuple> e;
  for (int i = 1; i <= 4; ++i) e.push_back({0, i});
  for (int i = 6; i <= 10; ++i) e.push_back({5, i});
  const Structure s(Signature::parse("E/2"), 11, {e});
  const auto q = formula_query(s, logic::parse_formula("(and (exists y (E x y)) (mod 2 0 y (E x y)))"), {"x"});
  CHECK(q.tuples() == std::vector<Tuple>{{0}});
  CHECK(gaifman_violations(q, s, 2).empty());
}

TEST_CASE("string witness is a weak violation") {
  const Structure s = gen::string_structure(gen::w_ell(3));
  const auto q = formula_query(s, gen::string_swap_query(), {"x"});
  const auto v = weak_gaifman_violations(q, s, 2);
  const PairViolation want{{2}, {8}, true};
  CHECK(std::find(v.begin(), v.end(), want) != v.end());
  CHECK(reverify(want, q, s, 2, true));
}

TEST_CASE("weak violations are gaifman violations, all re-verify") {
  Rng rng(30);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + static_cast<int>(rng.below(9));
    std::string w;
    for (int k = 0; k < n; ++k) w += rng.coin() ? '1' : '0';
    const Structure s = gen::string_structure(w, "01");
    const auto q = unary_query(s, [&](Element x) { return rng.below(3) == 0 || w[x] == '1'; });
    for (int r = 0; r <= 2; ++r) {
      const auto g = gaifman_violations(q, s, r);
      const auto wk = weak_gaifman_violations(q, s, r);
      for (const auto& x : wk) {
        CHECK(std::find(g.begin(), g.end(), x) != g.end());
        CHECK(reverify(x, q, s, r, true));
      }
      for (const auto& x : g) CHECK(reverify(x, q, s, r, false));
      CHECK(std::is_sorted(g.begin(), g.end(), [](const auto& a, const auto& b) {
        return std::tie(a.a, a.b) < std::tie(b.a, b.b);
      }));
    }
  }
}

TEST_CASE("shift violations on the reach path") {
  const auto fam = gen::reach_family(3, 1);
  const auto q = gen::reach_chain_query(fam.structure, 3);
  const auto v = shift_violations(q, fam.structure, 1, 3, 1);
  const ShiftViolation want{{{fam.anchors[0]}, {fam.anchors[1]}, {fam.anchors[2]}}, true};
  CHECK(std::find(v.begin(), v.end(), want) != v.end());
  for (const auto& x : v) CHECK(reverify(x, q, fam.structure, 1));
}

TEST_CASE("rotation-invariant query has no shift violations") {
  const auto fam = gen::reach_family(3, 1);
  QueryRelation q(3, fam.structure.size());
  for (int a = 0; a < fam.structure.size(); ++a)
    for (int b = 0; b < fam.structure.size(); ++b)
      for (int c = 0; c < fam.structure.size(); ++c)
        if ((a + b + c) % 2 == 0) q.insert(Tuple{a, b, c});
  CHECK(shift_violations(q, fam.structure, 1, 3, 1).empty());
}

TEST_CASE("shift with t=2 is the weak Gaifman condition on disjoint pairs") {
  // t=2: the rotation is the swap, so a violation is a disjoint isomorphic pair (a,b) in q with (b,a) not in q
  const auto fam = gen::reach_family(2, 2);
  QueryRelation q(2, fam.structure.size());
  for (int a = 0; a < fam.structure.size(); ++a)
    for (int b = a + 1; b < fam.structure.size(); ++b) q.insert(Tuple{a, b});
  const auto v = shift_violations(q, fam.structure, 2, 2, 1);
  const ShiftViolation want{{{fam.anchors[0]}, {fam.anchors[1]}}, true};
  CHECK(std::find(v.begin(), v.end(), want) != v.end());
  for (const auto& x : v) {
    REQUIRE(x.blocks.size() == 2);
    CHECK(isomorphic(neighborhood(fam.structure, x.blocks[0], 2), neighborhood(fam.structure, x.blocks[1], 2)));
    CHECK(q.contains(Tuple{x.blocks[0][0], x.blocks[1][0]}) != q.contains(Tuple{x.blocks[1][0], x.blocks[0][0]}));
  }
}

TEST_CASE("hanf types: cycles") {
  const Structure c8 = gen::cycles({8});
  const Structure c44 = gen::cycles({4, 4});
  CHECK(hanf_equivalent(c8, {}, c44, {}, 1));
  CHECK_FALSE(hanf_equivalent(c8, {}, c44, {}, 4));
  CHECK(hanf_equivalent(c8, Tuple{0}, c8, Tuple{0}, 3));
  CHECK_FALSE(hanf_equivalent(c8, {}, gen::cycles({7}), {}, 0));
  CanonicalCache cache;
  CHECK(hanf_types(c8, {}, 1, &cache) == hanf_types(c44, {}, 1));
}

TEST_CASE("hanf witness strings") {
  for (int ell = 1; ell <= 3; ++ell) {
    const auto hw = gen::hanf_witness(ell);
    CHECK(hanf_equivalent(gen::string_structure(hw.u, "012"), {}, gen::string_structure(hw.v, "012"), {}, ell));
  }
}

TEST_CASE("hanf violations of L over the witness pair") {
  const auto hw = gen::hanf_witness(2);
  std::vector<Structure> ss{gen::string_structure(hw.u, "012"), gen::string_structure(hw.v, "012")};
  std::vector<QueryRelation> qs;
  for (const auto& s : ss) qs.push_back(formula_query(s, gen::language_L(), {}));
  const auto v = hanf_violations(ss, qs, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].accepted_structure == 1);
  CHECK(v[0].rejected_structure == 0);
}

TEST_CASE("hanf-local class implies gaifman at 3r+1 on strings") {
  // class: all binary strings of length n, query: letter of x equals letter of x+1
  for (int n = 2; n <= 10; ++n)
    for (int r = 0; r <= 2; ++r) {
      std::vector<Structure> ss;
      std::vector<QueryRelation> qs;
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        const std::string w = word_of(bits, n, "01");
        ss.push_back(gen::string_structure(w, "01"));
        qs.push_back(unary_query(ss.back(), [&](Element x) { return x + 1 < n && w[x] == w[x + 1]; }));
      }
      if (!hanf_violations(ss, qs, r).empty()) continue;
      for (std::size_t i = 0; i < ss.size(); ++i) CHECK(gaifman_violations(qs[i], ss[i], 3 * r + 1).empty());
    }
}

TEST_CASE("disjoint swaps") {
  CHECK(disjoint_swap("00111100001111000", {2, 6, 10, 14}, 1) == std::optional<std::string>("00111100001111000"));
  CHECK(disjoint_swap("0101010", {1, 2, 3, 4}, 0) == std::optional<std::string>("0101010"));
  CHECK_FALSE(disjoint_swap("00111100001111000", {2, 6, 10, 14}, 3).has_value());
  CHECK_THROWS_AS(disjoint_swap("0101", {0, 1, 2, 3}, 0), PreconditionError);
  CHECK_THROWS_AS(disjoint_swap("0101", {1, 3, 2, 4}, 0), PreconditionError);

  Rng rng(50);
  for (int i = 0; i < 300; ++i) {
    const int n = 5 + static_cast<int>(rng.below(10));
    std::string w;
    for (int k = 0; k < n; ++k) w += static_cast<char>('0' + rng.below(3));
    std::vector<int> cuts;
    while (cuts.size() < 4) {
      const int c = 1 + static_cast<int>(rng.below(n));
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    const auto out = disjoint_swap(w, {cuts[0], cuts[1], cuts[2], cuts[3]}, static_cast<int>(rng.below(2)));
    if (!out) continue;
    CHECK(out->size() == w.size());
    auto a = w, b = *out;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    const std::string expect = w.substr(0, cuts[0]) + w.substr(cuts[2], cuts[3] - cuts[2]) +
                               w.substr(cuts[1], cuts[2] - cuts[1]) + w.substr(cuts[0], cuts[1] - cuts[0]) +
                               w.substr(cuts[3]);
    CHECK(*out == expect);
  }
}

TEST_CASE("swap closure") {
  const auto length_n = [](std::string_view) { return true; };
  CHECK(swap_closure_violations(length_n, "01", 8, 1).empty());
  const auto has_two = [](std::string_view w) { return w.find('2') != std::string_view::npos; };
  CHECK(swap_closure_violations(has_two, "012", 6, 0).empty());

  const Acceptor in_l = [](std::string_view w) { return gen::in_L(w); };
  CHECK_FALSE(swap_closure_violations(in_l, "012", 9, 0).empty());
  const auto v13 = swap_closure_violations(in_l, "012", 13, 1);
  REQUIRE(v13.size() == 1);
  CHECK(v13[0].w == "1110001112000");
  CHECK(v13[0].swapped == "1112000111000");
  CHECK(v13[0].cuts == SwapCuts{2, 5, 8, 12});
  for (const auto& x : v13) {
    CHECK(in_l(x.w));
    CHECK_FALSE(in_l(x.swapped));
    CHECK(disjoint_swap(x.w, x.cuts, 1) == std::optional<std::string>(x.swapped));
  }
}

TEST_CASE("arity reduction") {
  const AssignAlphabet ab{2, 1};
  CHECK(ab.size() == 4);
  CHECK(ab.letter(ab.encode(1, 1)) == 1);
  CHECK(ab.mask(ab.encode(1, 1)) == 1);
  const StringQuery carries_a = [](const std::vector<int>& w, std::span<const Element> pos) { return w[pos[0]] == 0; };
  const auto acc = arity_reduce(carries_a, ab);
  CHECK(acc({ab.encode(0, 1), ab.encode(1, 0)}));
  CHECK_FALSE(acc({ab.encode(1, 1), ab.encode(0, 0)}));
  CHECK_FALSE(acc({ab.encode(0, 1), ab.encode(0, 1)}));  // index 0 twice
  CHECK_FALSE(acc({ab.encode(0, 0), ab.encode(0, 0)}));  // index 0 missing

  const AssignAlphabet two{2, 2};
  const StringQuery before = [](const std::vector<int>&, std::span<const Element> pos) { return pos[0] < pos[1]; };
  const auto acc2 = arity_reduce(before, two);
  CHECK(acc2({two.encode(0, 1), two.encode(1, 2)}));
  CHECK_FALSE(acc2({two.encode(0, 2), two.encode(1, 1)}));
  CHECK(acc2({two.encode(0, 1), two.encode(0, 0), two.encode(1, 2)}));
  CHECK_FALSE(acc2({two.encode(0, 3), two.encode(0, 0)}));  // both indices at one position: x0 < x1 fails
}

TEST_CASE("hanf equivalence transfers through arity reduction (k=1, |Sigma|=2)") {
  // q(w, x): letter at x is 1 and its right neighbour is 0
  const StringQuery q = [](const std::vector<int>& w, std::span<const Element> p) {
    return w[p[0]] == 1 && p[0] + 1 < static_cast<int>(w.size()) && w[p[0] + 1] == 0;
  };
  const AssignAlphabet al{2, 1};
  const auto acc = arity_reduce(q, al);
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= 1; ++r)
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        for (int x = 0; x < n; ++x) {
          std::vector<int> w(n), wt(n);
          for (int i = 0; i < n; ++i) {
            w[i] = bits >> i & 1;
            wt[i] = al.encode(w[i], i == x ? 1u : 0u);
          }
          CHECK(acc(wt) == q(w, std::vector<Element>{x}));
          // anchored Hanf type of (S_w, x) matches the plain type of the marked string
          const Structure sw = gen::string_structure(w, 2);
          const Structure st = gen::string_structure(wt, al.size());
          for (std::uint32_t b2 = 0; b2 < (1u << n); ++b2)
            for (int y = 0; y < n; ++y) {
              std::vector<int> v(n), vt(n);
              for (int i = 0; i < n; ++i) {
                v[i] = b2 >> i & 1;
                vt[i] = al.encode(v[i], i == y ? 1u : 0u);
              }
              const bool anchored_eq = hanf_equivalent(sw, Tuple{x}, gen::string_structure(v, 2), Tuple{y}, r);
              const bool marked_eq = hanf_equivalent(st, {}, gen::string_structure(vt, al.size()), {}, r);
              if (anchored_eq) CHECK(marked_eq);
            }
        }
}

TEST_CASE("reports") {
  const auto h = gen::hose(3, 4);
  const auto q = formula_query(h.structure, gen::hose_query(3), {"x"});
  const auto rep = make_report("gaifman", 2, gaifman_violations(q, h.structure, 2), 1);
  CHECK(rep.violated());
  const auto text = rep.to_text();
  CHECK(text.find("notion: gaifman\nradius: 2\nverdict: 2 violations\n  (0)/(4) in=(0) out=(4)\n  ... 1 more\n") == 0);
  CHECK(text.find("--- report\nnotion gaifman\nradius 2\ncount 2\nwitness (0)/(4) in=(0) out=(4)\n--- end\n") !=
        std::string::npos);
  const auto none = make_report("hanf", 1, std::vector<HanfViolation>{});
  CHECK_FALSE(none.violated());
  CHECK(none.to_text().find("verdict: no-violation") != std::string::npos);
}

TEST_CASE("graph queries") {
  const auto cyc = gen::cycle_family(3, 2);
  const auto q = gen::cycle_query(cyc.structure, 3);
  CHECK(q.contains(Tuple{cyc.anchors[0], cyc.anchors[1], cyc.anchors[2]}));
  CHECK_FALSE(q.contains(Tuple{cyc.anchors[1], cyc.anchors[2], cyc.anchors[0]}));
  const auto sd = gen::same_distance_family(3, 2);
  const auto qs = gen::same_distance_query(sd.structure, 3);
  CHECK(qs.contains(Tuple{sd.anchors[0], sd.anchors[1], sd.anchors[2]}));
  CHECK_FALSE(qs.contains(Tuple{sd.anchors[1], sd.anchors[2], sd.anchors[0]}));
  CHECK_THROWS(gen::graph_query("nope", sd.structure, 3));
}

}  // TEST_SUITE
