#include <algorithm>
#include <map>

#include "modloc/errors.hpp"
#include "modloc/gaifman.hpp"
#include "modloc/isomorphism.hpp"
#include "modloc/lemmas.hpp"
#include "modloc/rep.hpp"
#include "modloc/rng.hpp"

namespace modloc::circuit {

ShellDecomposition::ShellDecomposition(const Structure& s, std::vector<Tuple> tuples, int m)
    : m_(m), tuples_(std::move(tuples)) {
  const int n = s.size();
  if (m < 0) throw PreconditionError("shell radius must be non-negative");
  if (tuples_.size() < 2) throw PreconditionError("need at least two anchor tuples");
  for (const auto& t : tuples_) {
    if (t.empty() || t.size() != tuples_[0].size()) throw PreconditionError("anchor tuples must share a positive arity");
    for (Element a : t)
      if (a < 0 || a >= n) throw PreconditionError("anchor element out of range");
  }
  owner_.assign(n, -1);
  shell_.assign(n, -1);
  pi_.resize(n);
  for (int x = 0; x < n; ++x) pi_[x] = x;

  GaifmanGraph g(s);
  const int t = period();
  for (int j = 0; j < t; ++j) {
    auto dist = distances_from(g, tuples_[j]);
    for (int x = 0; x < n; ++x) {
      if (!dist[x] || *dist[x] > m) continue;
      if (owner_[x] >= 0) throw PreconditionError("anchor neighborhoods are not disjoint");
      owner_[x] = j;
      shell_[x] = *dist[x];
    }
  }
  std::vector<AnchoredNeighborhood> nbs;
  for (int j = 0; j < t; ++j) nbs.push_back(neighborhood(s, g, tuples_[j], m));
  for (int j = 0; j < t; ++j) {
    const auto& from = nbs[j];
    const auto& to = nbs[(j + 1) % t];
    auto iso = find_isomorphism(from, to);
    if (!iso) throw PreconditionError("anchor neighborhoods are not isomorphic");
    for (std::size_t x = 0; x < iso->size(); ++x) pi_[from.index_map[x]] = to.index_map[(*iso)[x]];
  }
}

int ShellDecomposition::straddle(std::span<const Element> tuple) const {
  const int o = owner_[tuple[0]];
  if (o < 0) return 0;
  int lo = shell_[tuple[0]], hi = lo;
  for (Element x : tuple) {
    if (owner_[x] != o) return 0;
    lo = std::min(lo, shell_[x]);
    hi = std::max(hi, shell_[x]);
  }
  return hi == lo + 1 ? hi : 0;
}

Tuple ShellDecomposition::shifted(std::span<const Element> tuple, int nu) const {
  Tuple out(tuple.begin(), tuple.end());
  for (auto& x : out)
    if (shell_[x] == nu) x = pi_[x];
  return out;
}

std::vector<Element> ShellDecomposition::rotated_anchors(int i) const {
  std::vector<Element> out;
  const int t = period();
  for (int q = 0; q < t; ++q) {
    const auto& a = tuples_[(i + q) % t];
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

Structure lemma1_shifted_structure(const Structure& s, const std::vector<Tuple>& tuples, const Bits& w) {
  ShellDecomposition sd(s, tuples, static_cast<int>(w.size()));
  std::vector<std::vector<Tuple>> rels;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    std::vector<Tuple> out;
    for (const auto& c : s.tuples(r)) {
      const int nu = sd.straddle(c);
      out.push_back(nu > 0 && w[nu - 1] ? sd.shifted(c, nu) : c);
    }
    rels.push_back(std::move(out));
  }
  return Structure(s.signature(), s.size(), std::move(rels));
}

Lemma1Result lemma1_transform(const Circuit& c, const Structure& s, const std::vector<Tuple>& tuples,
                              int m, const Lemma1Options& options) {
  if (m < 1) throw PreconditionError("Lemma 1 needs m >= 1");
  ShellDecomposition sd(s, tuples, m);
  const int t = sd.period();
  const int n = s.size();
  const int anchors = static_cast<int>(tuples[0].size()) * t;
  RepLayout layout(s.signature(), n, anchors);
  if (static_cast<std::size_t>(c.input_width()) != layout.length())
    throw PreconditionError("circuit width " + std::to_string(c.input_width()) + " differs from Rep length " +
                            std::to_string(layout.length()));

  // hypotheses: the answer on a^(i) ignores the embedding; a^(0) accepted, a^(1) rejected
  Rng rng(options.seed);
  const auto id = logic::Embedding::identity(n);
  for (int i = 0; i < t; ++i) {
    const auto a = sd.rotated_anchors(i);
    const bool v = eval_circuit(c, rep_encoding(s, id, a));
    if (i == 0 && !v) throw PreconditionError("circuit rejects Rep(A, a^(0))");
    if (i == 1 && v) throw PreconditionError("circuit accepts Rep(A, a^(1))");
    for (int k = 0; k < options.spot_checks; ++k) {
      logic::Embedding e(rng.permutation(n));
      if (eval_circuit(c, rep_encoding(s, e, a)) != v)
        throw PreconditionError("circuit answer on a^(" + std::to_string(i) + ") depends on the embedding " +
                                e.to_string());
    }
  }

  const Bits base = rep_encoding(s, id, sd.rotated_anchors(0));
  InputSubstitution subst(base.size());
  for (std::size_t b = 0; b < base.size(); ++b) subst[b] = base[b] ? InputLiteral::one() : InputLiteral::zero();
  std::vector<char> rewritten(base.size(), 0);
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const auto& tup : s.tuples(r)) {
      const int nu = sd.straddle(tup);
      if (nu == 0) continue;
      const std::size_t b = layout.relation_bit(r, tup);
      const std::size_t b2 = layout.relation_bit(r, sd.shifted(tup, nu));
      if (base[b2] || rewritten[b] || rewritten[b2]) throw PreconditionError("shifted tuple collides with an existing bit");
      subst[b] = InputLiteral::neg_var_of(nu);
      subst[b2] = InputLiteral::var_of(nu);
      rewritten[b] = rewritten[b2] = 1;
    }
  }
  Circuit out = substitute_inputs(c, subst, m);
  return {out, std::move(subst), sd.pi_map(), circuit_stats(c), circuit_stats(out)};
}

}  // namespace modloc::circuit
