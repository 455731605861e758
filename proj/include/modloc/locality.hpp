#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modloc/invariance.hpp"
#include "modloc/isomorphism.hpp"
#include "modloc/structure.hpp"

namespace modloc::locality {

using logic::QueryRelation;

// Two anchor tuples with isomorphic anchored r-neighborhoods and different
// membership; a < b lexicographically.
struct PairViolation {
  Tuple a;
  Tuple b;
  bool a_member = false;
  bool operator==(const PairViolation&) const = default;
};

std::vector<PairViolation> gaifman_violations(const QueryRelation& q, const Structure& s, int r);
// Same, restricted to pairs with disjoint r-neighborhoods.
std::vector<PairViolation> weak_gaifman_violations(const QueryRelation& q, const Structure& s, int r);

// Blocks a_0 .. a_{t-1} (k-tuples) with pairwise isomorphic, pairwise disjoint
// r-neighborhoods such that (a_0 .. a_{t-1}) and (a_1 .. a_{t-1}, a_0)
// differ in membership. q has arity k*t.
struct ShiftViolation {
  std::vector<Tuple> blocks;
  bool member = false;  // membership of the unrotated family
  bool operator==(const ShiftViolation&) const = default;
};

std::vector<ShiftViolation> shift_violations(const QueryRelation& q, const Structure& s, int r, int t, int k);

// Rechecks a reported violation from scratch with pairwise isomorphism search.
bool reverify(const PairViolation& v, const QueryRelation& q, const Structure& s, int r, bool disjoint);
bool reverify(const ShiftViolation& v, const QueryRelation& q, const Structure& s, int r);

// Sorted canonical codes of (N_r(a c), a c) over all elements c.
std::vector<CanonicalCode> hanf_types(const Structure& s, std::span<const Element> a, int r,
                                      CanonicalCache* cache = nullptr);
// (s1, a) and (s2, b) are related by a type-preserving bijection.
bool hanf_equivalent(const Structure& s1, std::span<const Element> a, const Structure& s2,
                     std::span<const Element> b, int r);

struct HanfViolation {
  std::size_t accepted_structure = 0;
  Tuple accepted;
  std::size_t rejected_structure = 0;
  Tuple rejected;
  bool operator==(const HanfViolation&) const = default;
};

// Pairs over a class of structures (qs[i] = q(structures[i])) with equal
// size, equal Hanf types at radius r and different membership.
std::vector<HanfViolation> hanf_violations(const std::vector<Structure>& structures,
                                           const std::vector<QueryRelation>& qs, int r);

// Cut positions 0 <= i < j < i2 < j2 <= |w| with w = x u y v z,
// x = w[0,i), u = w[i,j), y = w[j,i2), v = w[i2,j2), z = w[j2,|w|).
struct SwapCuts {
  int i = 0, j = 0, i2 = 0, j2 = 0;
  bool operator==(const SwapCuts&) const = default;
};

// x v y u z when the r-neighborhoods of the positions just before u, y, v, z
// are pairwise disjoint and matched; throws PreconditionError on malformed
// cuts (x must be non-empty so that the first position exists).
std::optional<std::string> disjoint_swap(std::string_view w, const SwapCuts& cuts, int r);

using Acceptor = std::function<bool(std::string_view)>;

struct SwapViolation {
  std::string w;
  std::string swapped;
  SwapCuts cuts;
};

// All (w, w') of length n with w accepted, w' rejected, w' a disjoint r-swap
// of w.
std::vector<SwapViolation> swap_closure_violations(const Acceptor& accept, std::string_view alphabet, int n,
                                                   int r);

// Letters of Sigma x 2^[k] as integers letter * 2^k + mask.
struct AssignAlphabet {
  int sigma = 2;
  int k = 1;
  int size() const { return sigma << k; }
  int encode(int letter, unsigned mask) const { return (letter << k) | static_cast<int>(mask); }
  int letter(int symbol) const { return symbol >> k; }
  unsigned mask(int symbol) const { return static_cast<unsigned>(symbol) & ((1u << k) - 1); }
};

// k-ary query on integer strings over [sigma].
using StringQuery = std::function<bool(const std::vector<int>& w, std::span<const Element> positions)>;
using WordAcceptor = std::function<bool(const std::vector<int>& w)>;

// Acceptor for {w in L_assign(k) : occ(w) in q(S_w~)}.
WordAcceptor arity_reduce(StringQuery q, AssignAlphabet alphabet);

// Report of one tester run. Witness lists are capped; total counts all.
struct LocalityReport {
  std::string notion;  // gaifman | weak_gaifman | shift(t) | hanf
  int radius = 0;
  std::size_t total = 0;
  std::vector<std::string> witnesses;
  std::size_t cap = 16;

  bool violated() const { return total > 0; }
  // Human-readable lines followed by a "--- report" ... "--- end" block.
  std::string to_text() const;
};

LocalityReport make_report(std::string notion, int r, const std::vector<PairViolation>& v, std::size_t cap = 16);
LocalityReport make_report(std::string notion, int r, const std::vector<ShiftViolation>& v, std::size_t cap = 16);
LocalityReport make_report(std::string notion, int r, const std::vector<HanfViolation>& v, std::size_t cap = 16);

}  // namespace modloc::locality
