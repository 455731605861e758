#include <bit>

#include "doctest.h"
#include "modloc/circuit_eval.hpp"
#include "modloc/compile.hpp"
#include "modloc/errors.hpp"
#include "modloc/formulas.hpp"
#include "modloc/generators.hpp"
#include "modloc/isomorphism.hpp"
#include "modloc/lemmas.hpp"
#include "modloc/parser.hpp"
#include "modloc/rep.hpp"

using namespace modloc;
using namespace modloc::circuit;

namespace {

Bits bits_of(std::uint64_t x, int m) {
  Bits b(m);
  for (int i = 0; i < m; ++i) b[i] = (x >> i) & 1;
  return b;
}

Structure digraph(int n, std::vector<Tuple> edges) { return Structure(Signature::parse("E/2"), n, {std::move(edges)}); }

}  // namespace

TEST_SUITE("lemmas") {

TEST_CASE("shell decomposition of a path") {
  const auto fam = gen::reach_family(2, 2);  // 0..9, anchors 2 and 7
  const ShellDecomposition sd(fam.structure, {{2}, {7}}, 2);
  CHECK(sd.owner(0) == 0);
  CHECK(sd.shell(0) == 2);
  CHECK(sd.owner(9) == 1);
  CHECK(sd.pi(2) == 7);
  CHECK(sd.pi(7) == 2);
  CHECK(sd.pi(4) == 9);
  CHECK(sd.straddle(Tuple{2, 3}) == 1);
  CHECK(sd.straddle(Tuple{3, 4}) == 2);
  CHECK(sd.straddle(Tuple{4, 5}) == 0);
  CHECK(sd.shifted(Tuple{2, 3}, 1) == Tuple{2, 8});
  CHECK(sd.rotated_anchors(1) == std::vector<Element>{7, 2});

  CHECK_THROWS_AS(ShellDecomposition(fam.structure, {{2}, {7}}, 3), PreconditionError);  // overlap
  CHECK_THROWS_AS(ShellDecomposition(fam.structure, {{0}, {7}}, 1), PreconditionError);  // not isomorphic
}

TEST_CASE("A_w for w = 0^m is A") {
  const auto fam = gen::reach_family(3, 2);
  CHECK(lemma1_shifted_structure(fam.structure, {{2}, {7}, {12}}, Bits(2, 0)) == fam.structure);
}

TEST_CASE("A_w on two disjoint anchored paths swaps the first successors") {
  // paths 0->1->2->3->4 and 5->6->7->8->9 anchored at their starts
  const Structure s = digraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  const Structure aw = lemma1_shifted_structure(s, {{0}, {5}}, bits_from_string("1000"));
  const Structure hand = digraph(10, {{0, 6}, {1, 2}, {2, 3}, {3, 4}, {5, 1}, {6, 7}, {7, 8}, {8, 9}});
  CHECK(aw == hand);
  const Structure aw2 = lemma1_shifted_structure(s, {{0}, {5}}, bits_from_string("0100"));
  CHECK(aw2 == digraph(10, {{0, 1}, {1, 7}, {2, 3}, {3, 4}, {5, 6}, {6, 2}, {7, 8}, {8, 9}}));
}

TEST_CASE("A_w is the rotated structure on the reach family") {
  for (int t = 2; t <= 3; ++t)
    for (int m = 1; m <= 4; ++m) {
      const auto fam = gen::reach_family(t, m);
      std::vector<Tuple> tuples;
      for (Element a : fam.anchors) tuples.push_back({a});
      for (std::uint64_t x = 0; x < (1ull << m); ++x) {
        const Structure aw = lemma1_shifted_structure(fam.structure, tuples, bits_of(x, m));
        Tuple rotated;
        const int shift = std::popcount(x) % t;
        for (int i = 0; i < t; ++i) rotated.push_back(fam.anchors[(i + shift) % t]);
        CHECK(isomorphic(anchored(aw, fam.anchors), anchored(fam.structure, rotated)));
      }
    }
}

TEST_CASE("lemma1_transform simulates C on A_w") {
  const int t = 2, m = 3;
  const auto fam = gen::reach_family(t, m);
  const Structure& s = fam.structure;
  const Circuit c = compile(gen::reach_shift(t, s.size() - 1), s.signature(), s.size(), {"x0", "x1"});
  const auto res = lemma1_transform(c, s, {{fam.anchors[0]}, {fam.anchors[1]}}, m);
  CHECK(res.circuit.input_width() == m);
  CHECK(res.transformed.size <= res.original.size);
  CHECK(res.transformed.depth == res.original.depth);
  const auto id = logic::Embedding::identity(s.size());
  for (std::uint64_t x = 0; x < (1ull << m); ++x) {
    const Bits w = bits_of(x, m);
    const Structure aw = lemma1_shifted_structure(s, {{fam.anchors[0]}, {fam.anchors[1]}}, w);
    CHECK(eval_circuit(res.circuit, w) == eval_circuit(c, rep_encoding(aw, id, fam.anchors)));
    CHECK(eval_circuit(res.circuit, w) == (std::popcount(x) % 2 == 0));
  }
}

TEST_CASE("lemma1_transform rejects circuits violating the hypotheses") {
  const auto fam = gen::reach_family(2, 1);
  const Structure& s = fam.structure;
  const std::vector<Tuple> tuples{{fam.anchors[0]}, {fam.anchors[1]}};
  // symmetric query: does not separate a^(0) from a^(1)
  const Circuit sym = compile(logic::parse_formula("(= x0 x0)"), s.signature(), s.size(), {"x0", "x1"});
  CHECK_THROWS_AS(lemma1_transform(sym, s, tuples, 1), PreconditionError);
  // order-dependent query
  const Circuit ord = compile(logic::parse_formula("(num< x0 x1)"), s.signature(), s.size(), {"x0", "x1"});
  CHECK_THROWS_AS(lemma1_transform(ord, s, tuples, 1), PreconditionError);
  // wrong width
  const Circuit narrow(1, {{GateKind::Input, 1, {}}}, 0);
  CHECK_THROWS_AS(lemma1_transform(narrow, s, tuples, 1), PreconditionError);
}

TEST_CASE("zero replacement outputs") {
  for (int m = 1; m <= 10; ++m)
    for (int j = 0; j <= std::min(m, 3); ++j) {
      const auto outs = zero_replacement_outputs(m, j);
      REQUIRE(static_cast<int>(outs.size()) == m);
      std::vector<std::vector<std::uint8_t>> sweeps;
      for (const auto& c : outs) sweeps.push_back(sweep(c, 0, 1ull << m, Kernel::Scalar));
      for (std::uint64_t x = 0; x < (1ull << m); ++x) {
        if (m - std::popcount(x) < j) continue;
        // oracle: flip the first j zeros
        std::uint64_t want = x;
        int flipped = 0;
        for (int i = 0; i < m && flipped < j; ++i)
          if (!(x >> i & 1)) {
            want |= 1ull << i;
            ++flipped;
          }
        for (int i = 0; i < m; ++i) CHECK(sweeps[i][x] == ((want >> i) & 1));
      }
    }
}

TEST_CASE("mod counter") {
  const Circuit c = mod_counter(6, 3);
  const auto out = sweep(c, 0, 64);
  for (std::uint64_t x = 0; x < 64; ++x) CHECK(out[x] == (std::popcount(x) % 3 == 0));
  CHECK(circuit_stats(c).size == 1);
}

TEST_CASE("lemma2 on the mod-3 counter") {
  const Circuit c = mod_counter(10, 3);
  const auto res = lemma2_transform(c, 3);
  CHECK(res.r == 3);
  CHECK(res.residue_signature == "100");
  CHECK(res.bounds_ok);
  CHECK(res.stats.depth <= res.input_stats.depth + 6);
  CHECK(res.stats.size <= 3 * res.input_stats.size + 2000);
  CHECK(sweep(res.circuit, 0, 1024) == sweep(c, 0, 1024));
}

TEST_CASE("lemma2 on a parity circuit viewed with t=4") {
  const Circuit c = mod_counter(10, 2);
  const auto res = lemma2_transform(c, 4);
  CHECK(res.residue_signature == "1010");
  CHECK(res.r == 2);
  const auto out = sweep(res.circuit, 0, 1024);
  for (std::uint64_t x = 0; x < 1024; ++x) CHECK(out[x] == (std::popcount(x) % 2 == 0));
}

TEST_CASE("lemma2 preconditions") {
  CHECK_THROWS_WITH_AS(lemma2_transform(mod_counter(9, 3), 3), doctest::Contains("m > 9"), PreconditionError);
  // residue 1 accepted: b_0 b_1 != 10
  CircuitBuilder b(10);
  std::vector<int> ins;
  for (int nu = 1; nu <= 10; ++nu) ins.push_back(b.input(nu));
  const Circuit odd = b.build(b.negation(b.mod_of(2, ins)));
  CHECK_THROWS_AS(lemma2_transform(odd, 2), PreconditionError);
  // not a function of |w|_1 mod t
  CircuitBuilder b2(10);
  const Circuit first = b2.build(b2.input(1));
  CHECK_THROWS_AS(lemma2_transform(first, 2), PreconditionError);
}

}  // TEST_SUITE
