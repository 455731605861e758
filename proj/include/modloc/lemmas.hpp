#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modloc/circuit.hpp"
#include "modloc/evaluate.hpp"
#include "modloc/structure.hpp"

namespace modloc::circuit {

// Shell decomposition of the m-neighborhoods of t anchor tuples a_0..a_{t-1}.
// Checks that the neighborhoods are pairwise disjoint and isomorphic and
// computes pi, the union of the isomorphisms N_m(a_j) -> N_m(a_{j+1 mod t}).
class ShellDecomposition {
 public:
  ShellDecomposition(const Structure& s, std::vector<Tuple> tuples, int m);

  int radius() const { return m_; }
  int period() const { return static_cast<int>(tuples_.size()); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  // owner(x) = j if x lies in N_m(a_j), else -1; shell(x) = dist(x, a_j).
  int owner(Element x) const { return owner_[x]; }
  int shell(Element x) const { return shell_[x]; }
  Element pi(Element x) const { return pi_[x]; }
  const std::vector<Element>& pi_map() const { return pi_; }

  // nu in 1..m if the tuple straddles shells nu-1 and nu of a single anchor
  // (the tuples rewritten by the shift construction), else 0.
  int straddle(std::span<const Element> tuple) const;
  // Components in the outer shell nu mapped through pi.
  Tuple shifted(std::span<const Element> tuple, int nu) const;

  // a_0 a_1 ... a_{t-1} rotated left by i, flattened to k*t anchors.
  std::vector<Element> rotated_anchors(int i) const;

 private:
  int m_;
  std::vector<Tuple> tuples_;
  std::vector<int> owner_;
  std::vector<int> shell_;
  std::vector<Element> pi_;
};

// The structure A_w: every straddling tuple of shells nu-1, nu whose bit
// w_nu is 1 has its shell-nu components moved to the next anchor.
Structure lemma1_shifted_structure(const Structure& s, const std::vector<Tuple>& tuples, const Bits& w);

struct Lemma1Options {
  int spot_checks = 8;           // random embeddings per anchor rotation, besides the identity
  std::uint64_t seed = 0xC0FFEE;
};

struct Lemma1Result {
  Circuit circuit;                 // m inputs
  InputSubstitution substitution;  // original input nu-1 -> literal over w
  std::vector<Element> pi;
  CircuitStats original;
  CircuitStats transformed;
};

// Rewrites the inputs of c (over Rep(A, a^(0)) under the identity embedding)
// so that on w it computes c(Rep(A_w, a^(0))).
// Throws PreconditionError if the neighborhood or acceptance hypotheses fail.
Lemma1Result lemma1_transform(const Circuit& c, const Structure& s, const std::vector<Tuple>& tuples,
                              int m, const Lemma1Options& options = {});

struct Lemma2Result {
  Circuit circuit;
  int r = 0;
  std::string residue_signature;  // b_0 .. b_{t-1}
  CircuitStats input_stats;
  CircuitStats stats;
  int depth_bound = 0;            // d + 6
  std::size_t size_bound = 0;     // t*M + 2*m^t
  bool bounds_ok = false;
};

// Accepts exactly the w with |w|_1 = 0 mod r for a factor r >= 2 of t.
// Requires m > 9, that c_tilde only depends on |w|_1 mod t (checked by a full
// sweep) and that b_0 b_1 = 10.
Lemma2Result lemma2_transform(const Circuit& c_tilde, int t);

// m circuits on m inputs; output i is bit i+1 of w with its first j zeros
// replaced by ones (valid when w has at least j zeros).
std::vector<Circuit> zero_replacement_outputs(int m, int j);

// Circuit over m inputs accepting iff |w|_1 = 0 mod t, one MOD_t gate.
Circuit mod_counter(int m, int t);

}  // namespace modloc::circuit
