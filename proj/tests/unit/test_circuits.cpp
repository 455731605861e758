#include <bit>
#include <numeric>

#include "doctest.h"
#include "modloc/circuit.hpp"
#include "modloc/circuit_eval.hpp"
#include "modloc/compile.hpp"
#include "modloc/errors.hpp"
#include "modloc/formulas.hpp"
#include "modloc/generators.hpp"
#include "modloc/parser.hpp"
#include "modloc/rep.hpp"
#include "modloc/rng.hpp"
#include "modloc/words.hpp"

using namespace modloc;
using namespace modloc::circuit;

namespace {

Bits bits_of(std::uint64_t x, int m) {
  Bits b(m);
  for (int i = 0; i < m; ++i) b[i] = (x >> i) & 1;
  return b;
}

// Random circuit over m inputs with all gate kinds.
Circuit random_circuit(Rng& rng, int m, int gates) {
  std::vector<Gate> gs;
  gs.push_back({GateKind::Const0, 0, {}});
  gs.push_back({GateKind::Const1, 0, {}});
  for (int nu = 1; nu <= m; ++nu) {
    gs.push_back({GateKind::Input, nu, {}});
    gs.push_back({GateKind::NegInput, nu, {}});
  }
  for (int g = 0; g < gates; ++g) {
    const int fan = 1 + static_cast<int>(rng.below(4));
    std::vector<int> args;
    for (int k = 0; k < fan; ++k) args.push_back(static_cast<int>(rng.below(gs.size())));
    switch (rng.below(3)) {
      case 0: gs.push_back({GateKind::And, 0, args}); break;
      case 1: gs.push_back({GateKind::Or, 0, args}); break;
      default: gs.push_back({GateKind::Mod, 2 + static_cast<int>(rng.below(3)), args});
    }
  }
  const int out = static_cast<int>(gs.size()) - 1;
  return Circuit(m, std::move(gs), out);
}

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("single MOD2 gate") {
  const Circuit c(2, {{GateKind::Input, 1, {}}, {GateKind::Input, 2, {}}, {GateKind::Mod, 2, {0, 1}}}, 2);
  CHECK(eval_circuit(c, bits_from_string("11")));
  CHECK_FALSE(eval_circuit(c, bits_from_string("10")));
  CHECK(eval_circuit(c, bits_from_string("00")));
  const auto st = circuit_stats(c);
  CHECK(st.depth == 1);
  CHECK(st.size == 1);
}

TEST_CASE("constant circuit and chain depth") {
  const Circuit one(3, {{GateKind::Const1, 0, {}}}, 0);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(eval_circuit(one, bits_of(x, 3)));
  const Circuit chain(1, {{GateKind::Input, 1, {}}, {GateKind::And, 0, {0}}, {GateKind::Or, 0, {1}}, {GateKind::Mod, 2, {2}}},
                      3);
  CHECK(circuit_stats(chain).depth == 3);
  CHECK(circuit_stats(chain).size == 3);
}

TEST_CASE("malformed circuits") {
  CHECK_THROWS_AS(Circuit(1, {{GateKind::And, 0, {0}}}, 0), PreconditionError);
  CHECK_THROWS_AS(Circuit(1, {{GateKind::Input, 2, {}}}, 0), PreconditionError);
  CHECK_THROWS_AS(parse_circuit("inputs 1\ng0 in 1\n"), ParseError);
}

TEST_CASE("text roundtrip") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const Circuit c = random_circuit(rng, 4, 12);
    const Circuit back = parse_circuit(to_text(c));
    CHECK(back == c);
  }
}

TEST_CASE("kernels agree with the reference evaluator") {
  Rng rng(2);
  std::vector<Kernel> kernels{Kernel::Scalar, Kernel::Portable64};
  if (kernel_available(Kernel::Avx2)) kernels.push_back(Kernel::Avx2);
  for (int i = 0; i < 30; ++i) {
    const int m = 1 + static_cast<int>(rng.below(10));
    const Circuit c = random_circuit(rng, m, 20);
    const std::uint64_t count = 1ull << m;
    std::vector<std::uint8_t> want(count);
    for (std::uint64_t x = 0; x < count; ++x) want[x] = eval_circuit(c, bits_of(x, m));
    for (Kernel k : kernels) CHECK(sweep(c, 0, count, k) == want);
    // unaligned windows
    for (Kernel k : kernels) {
      const auto part = sweep(c, count > 3 ? 3 : 0, count > 3 ? count - 3 : count, k);
      for (std::size_t j = 0; j < part.size(); ++j)
        CHECK(part[j] == want[(count > 3 ? 3 : 0) + j]);
    }
    std::vector<Bits> batch;
    for (int j = 0; j < 70; ++j) batch.push_back(bits_of(rng.below(count), m));
    const auto ref = eval_many(c, batch, Kernel::Scalar);
    for (Kernel k : kernels) CHECK(eval_many(c, batch, k) == ref);
  }
  CHECK(kernel_name(Kernel::Scalar) == std::string("scalar"));
}

TEST_CASE("builder folds constants and shares gates") {
  CircuitBuilder b(3);
  const int x = b.input(1), y = b.input(2);
  const int a1 = b.and_of({x, y});
  CHECK(b.and_of({y, x}) == a1);
  CHECK(b.is_constant(b.and_of({x, b.constant(false)}), false));
  CHECK(b.and_of({x, b.constant(true)}) == x);
  CHECK(b.is_constant(b.or_of({}), false));
  CHECK(b.is_constant(b.and_of({}), true));
  const int nx = b.negation(x);
  CHECK(b.gate(nx).kind == GateKind::NegInput);
  const int m = b.mod_of(3, {x, y, b.input(3)});
  const int nm = b.negation(m);
  const Circuit c = b.build(nm);
  for (std::uint64_t v = 0; v < 8; ++v) CHECK(eval_circuit(c, bits_of(v, 3)) == (std::popcount(v) % 3 != 0));
}

TEST_CASE("negation of every gate kind") {
  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    const Circuit c = random_circuit(rng, 5, 10);
    CircuitBuilder b(5);
    const int out = b.import(c, [&](const Gate& g) {
      switch (g.kind) {
        case GateKind::Input: return b.input(g.param);
        case GateKind::NegInput: return b.neg_input(g.param);
        case GateKind::Const0: return b.constant(false);
        default: return b.constant(true);
      }
    });
    const Circuit neg = b.build(b.negation(out));
    for (std::uint64_t x = 0; x < 32; ++x) CHECK(eval_circuit(neg, bits_of(x, 5)) != eval_circuit(c, bits_of(x, 5)));
  }
}

TEST_CASE("substitute_inputs") {
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const int m = 1 + static_cast<int>(rng.below(10));
    const Circuit c = random_circuit(rng, m, 15);
    InputSubstitution same;
    for (int nu = 1; nu <= m; ++nu) same.push_back(InputLiteral::var_of(nu));
    const Circuit d = substitute_inputs(c, same, m);
    CHECK(sweep(d, 0, 1ull << m, Kernel::Scalar) == sweep(c, 0, 1ull << m, Kernel::Scalar));
    CHECK(circuit_stats(d).size == circuit_stats(c).size);

    InputSubstitution consts(m, InputLiteral::one());
    const Circuit k = substitute_inputs(c, consts, m);
    const auto out = sweep(k, 0, 1ull << m, Kernel::Scalar);
    for (auto v : out) CHECK(v == out[0]);
  }
  CHECK(InputLiteral::var_of(3).negated() == InputLiteral::neg_var_of(3));
  CHECK(InputLiteral::zero().negated() == InputLiteral::one());
}

TEST_CASE("rep encoding layout") {
  const Signature sig = Signature::parse("E/2");
  CHECK(RepLayout(sig, 3, 1).length() == 12);
  const Structure empty(sig, 2, {{}});
  CHECK(bits_to_string(rep_encoding(empty, logic::Embedding::identity(2), Tuple{0})) == "000010");
  const Structure one(sig, 2, {{{0, 1}}});
  CHECK(bits_to_string(rep_encoding(one, logic::Embedding::identity(2), Tuple{})) == "0100");
  // positions, not elements
  CHECK(bits_to_string(rep_encoding(one, logic::Embedding({1, 0}), Tuple{0})) == "001001");
}

TEST_CASE("compile small cases") {
  const Signature sig = Signature::parse("E/2");
  const auto f = logic::parse_formula("(exists x (E x x))", sig);
  const Circuit c = compile(f, sig, 2, {});
  CHECK(c.input_width() == 4);
  for (std::uint64_t x = 0; x < 16; ++x) CHECK(eval_circuit(c, bits_of(x, 4)) == (((x >> 0) & 1) || ((x >> 3) & 1)));

  const Circuit zero = compile(logic::parse_formula("(forall x (num< x x))", sig), sig, 3, {});
  CHECK(zero.gate(zero.output()).kind == GateKind::Const0);
}

TEST_CASE("compile even cycles at n=4 on sampled relations and embeddings") {
  const Signature sig = Signature::parse("E/2");
  const auto phi = gen::even_cycles();
  const Circuit c = compile(phi, sig, 4, {});
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto mask = rng.below(1u << 16);
    std::vector<Tuple> edges;
    for (int b = 0; b < 16; ++b)
      if (mask >> b & 1) edges.push_back({b / 4, b % 4});
    const Structure s(sig, 4, {edges});
    const logic::Embedding e(rng.permutation(4));
    CHECK(eval_circuit(c, rep_encoding(s, e, Tuple{})) == logic::eval(s, e, phi, {}));
  }
  const Structure cc = gen::cycles({2, 2});
  CHECK(eval_circuit(c, rep_encoding(cc, logic::Embedding::identity(4), Tuple{})));
}

TEST_CASE("compile vs eval over {E/2, P/1}, n <= 3, depth <= 2") {
  const Signature sig = Signature::parse("E/2 P/1");
  const std::vector<std::string> texts{"(and (P x) (exists y (E x y)))", "(mod 2 1 y (or (E x y) (P y)))",
                                       "(forall y (or (num< x y) (= x y) (not (P y))))",
                                       "(mod 3 2 y (exists z (and (E y z) (P z))))"};
  for (const auto& text : texts) {
    const auto f = logic::parse_formula(text, sig);
    const auto free = logic::free_variables(*f);
    logic::Evaluator ev(f, sig, logic::NumericVocabulary::builtin(), free);
    for (int n = 1; n <= 3; ++n) {
      const Circuit c = compile(f, sig, n, free);
      for (std::uint32_t mask = 0; mask < (1u << (n * n + n)); ++mask) {
        std::vector<Tuple> e, p;
        for (int b = 0; b < n * n; ++b)
          if (mask >> b & 1) e.push_back({b / n, b % n});
        for (int a = 0; a < n; ++a)
          if (mask >> (n * n + a) & 1) p.push_back({a});
        const Structure s(sig, n, {e, p});
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          const logic::Embedding emb(perm);
          for (int x = 0; x < n; ++x) {
            const Tuple vals = free.empty() ? Tuple{} : Tuple{x};
            CHECK(eval_circuit(c, rep_encoding(s, emb, vals)) == ev(s, emb, vals));
            if (free.empty()) break;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root("10").root == "10");
  CHECK(primitive_root("10").multiplicity == 1);
  CHECK(primitive_root("1010").root == "10");
  CHECK(primitive_root("1010").multiplicity == 2);
  CHECK(primitive_root("100100").root == "100");
  CHECK(primitive_root("111").root == "1");
  CHECK(primitive_root("111").multiplicity == 3);
  // oracle: shortest prefix whose power is the word
  for (std::uint32_t bits = 0; bits < (1u << 10); ++bits)
    for (int len = 1; len <= 10; ++len) {
      if (bits >> len) continue;
      std::string w(len, '0');
      for (int i = 0; i < len; ++i) w[i] = (bits >> i & 1) ? '1' : '0';
      int best = len;
      for (int d = 1; d < len; ++d) {
        if (len % d) continue;
        std::string p;
        while (p.size() < w.size()) p += w.substr(0, d);
        if (p == w) {
          best = d;
          break;
        }
      }
      const auto r = primitive_root(w);
      CHECK(r.root == w.substr(0, best));
      CHECK(r.multiplicity == len / best);
    }
}

}  // TEST_SUITE
