#pragma once

#include <span>

#include "modloc/circuit.hpp"
#include "modloc/evaluate.hpp"
#include "modloc/structure.hpp"

namespace modloc::circuit {

// Bit layout of Rep(A, a) for size n and K anchors: one block of n^r bits
// per relation (signature order, tuples of positions in lexicographic order),
// then K one-hot blocks of n bits. Offsets are 0-based; input nu = offset+1.
class RepLayout {
 public:
  RepLayout(const Signature& sig, int n, int anchors);

  std::size_t length() const { return length_; }
  int universe() const { return n_; }
  int anchors() const { return k_; }
  const Signature& signature() const { return sig_; }

  std::size_t relation_offset(std::size_t rel) const { return rel_offset_[rel]; }
  std::size_t relation_bit(std::size_t rel, std::span<const int> positions) const;
  std::size_t anchor_bit(int k, int position) const;

 private:
  Signature sig_;
  int n_;
  int k_;
  std::vector<std::size_t> rel_offset_;
  std::size_t anchor_offset_;
  std::size_t length_;
};

Bits rep_encoding(const Structure& s, const logic::Embedding& e, std::span<const Element> anchors);

}  // namespace modloc::circuit
