#include <bit>
#include <functional>

#include "modloc/circuit_eval.hpp"
#include "modloc/errors.hpp"
#include "modloc/lemmas.hpp"
#include "modloc/words.hpp"

namespace modloc::circuit {

namespace {

// Calls f for every k-subset of {first..last} in lexicographic order.
void for_each_subset(int first, int last, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      f(pick);
      return;
    }
    for (int v = from; v <= last; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(first);
}

// w^(j)_i as a DNF: w_i, or w_i = 0 with fewer than j zeros before position i.
int zero_replaced_bit(CircuitBuilder& b, int j, int i) {
  if (j == 0) return b.input(i);
  std::vector<int> terms{b.input(i)};
  for (int k = 0; k < j && k <= i - 1; ++k) {
    for_each_subset(1, i - 1, k, [&](const std::vector<int>& zeros) {
      std::vector<int> lits{b.neg_input(i)};
      std::size_t z = 0;
      for (int v = 1; v < i; ++v) {
        const bool is_zero = z < zeros.size() && zeros[z] == v;
        if (is_zero) ++z;
        lits.push_back(b.literal(v, is_zero));
      }
      terms.push_back(b.and_of(std::move(lits)));
    });
  }
  return b.or_of(std::move(terms));
}

// Accepts iff w has exactly j zeros.
int exact_zeros(CircuitBuilder& b, int m, int j) {
  std::vector<int> terms;
  for_each_subset(1, m, j, [&](const std::vector<int>& zeros) {
    std::vector<int> lits;
    std::size_t z = 0;
    for (int v = 1; v <= m; ++v) {
      const bool is_zero = z < zeros.size() && zeros[z] == v;
      if (is_zero) ++z;
      lits.push_back(b.literal(v, is_zero));
    }
    terms.push_back(b.and_of(std::move(lits)));
  });
  return b.or_of(std::move(terms));
}

int at_least_zeros(CircuitBuilder& b, int m, int j) {
  std::vector<int> terms;
  for_each_subset(1, m, j, [&](const std::vector<int>& zeros) {
    std::vector<int> lits;
    for (int v : zeros) lits.push_back(b.neg_input(v));
    terms.push_back(b.and_of(std::move(lits)));
  });
  return b.or_of(std::move(terms));
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

}  // namespace

Circuit mod_counter(int m, int t) {
  if (m < 1 || t < 2) throw PreconditionError("mod counter needs m >= 1 and t >= 2");
  CircuitBuilder b(m);
  std::vector<int> args;
  for (int v = 1; v <= m; ++v) args.push_back(b.input(v));
  return b.build(b.mod_of(t, std::move(args)));
}

std::vector<Circuit> zero_replacement_outputs(int m, int j) {
  if (m < 1 || j < 0) throw PreconditionError("invalid zero replacement parameters");
  std::vector<Circuit> out;
  for (int i = 1; i <= m; ++i) {
    CircuitBuilder b(m);
    out.push_back(b.build(zero_replaced_bit(b, j, i)));
  }
  return out;
}

Lemma2Result lemma2_transform(const Circuit& c_tilde, int t) {
  const int m = c_tilde.input_width();
  if (m <= 9) throw PreconditionError("Lemma 2 requires m > 9, got m=" + std::to_string(m));
  if (m > 22) throw SizeOverflowError("Lemma 2 sweep limited to m <= 22");
  if (t < 2 || t > m) throw PreconditionError("period t must satisfy 2 <= t <= m");

  const std::uint64_t total = std::uint64_t{1} << m;
  const auto values = sweep(c_tilde, 0, total, default_kernel());
  std::vector<int> b(t, -1);
  for (std::uint64_t x = 0; x < total; ++x) {
    const int j = std::popcount(x) % t;
    if (b[j] < 0) b[j] = values[x];
    else if (b[j] != values[x])
      throw PreconditionError("circuit answer is not determined by |w|_1 mod " + std::to_string(t));
  }
  std::string sig;
  for (int v : b) sig += v ? '1' : '0';
  if (sig.substr(0, 2) != "10") throw PreconditionError("b_0 b_1 = " + sig.substr(0, 2) + ", expected 10");
  const int r = static_cast<int>(primitive_root(sig).root.size());

  int mod_p = 0;
  for (const auto& g : c_tilde.gates())
    if (g.kind == GateKind::Mod) {
      mod_p = g.param;
      break;
    }

  CircuitBuilder cb(m);
  std::vector<int> second;
  for (int j = 0; j <= t - 2; ++j)
    if ((m - j) % r == 0) second.push_back(exact_zeros(cb, m, j));
  const int c2 = cb.or_of(std::move(second));

  std::vector<int> first{at_least_zeros(cb, m, t - 1)};
  for (int j = 0; j < t; ++j) {
    std::vector<int> pos(m + 1), neg(m + 1);
    for (int i = 1; i <= m; ++i) {
      pos[i] = zero_replaced_bit(cb, j, i);
      neg[i] = cb.negation(pos[i]);
    }
    const int a_j = cb.import(c_tilde, [&](const Gate& g) {
      switch (g.kind) {
        case GateKind::Input: return pos[g.param];
        case GateKind::NegInput: return neg[g.param];
        case GateKind::Const1: return cb.constant(true);
        default: return cb.constant(false);
      }
    });
    if (b[j]) first.push_back(a_j);
    else first.push_back(mod_p ? cb.mod_of(mod_p, {a_j}) : cb.negation(a_j));
  }
  const int c1 = cb.and_of(std::move(first));

  Lemma2Result res{cb.build(cb.or_of({c1, c2})), r, sig, circuit_stats(c_tilde), {}, 0, 0, false};
  res.stats = circuit_stats(res.circuit);
  res.depth_bound = res.input_stats.depth + 6;
  res.size_bound = static_cast<std::size_t>(t) * res.input_stats.size + 2 * ipow(static_cast<std::size_t>(m), t);
  res.bounds_ok = res.stats.depth <= res.depth_bound && res.stats.size <= res.size_bound;
  return res;
}

}  // namespace modloc::circuit
