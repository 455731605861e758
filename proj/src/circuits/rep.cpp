#include "modloc/rep.hpp"

#include "modloc/errors.hpp"

namespace modloc::circuit {

RepLayout::RepLayout(const Signature& sig, int n, int anchors) : sig_(sig), n_(n), k_(anchors) {
  if (n < 1 || anchors < 0) throw PreconditionError("invalid Rep layout parameters");
  std::size_t off = 0;
  for (std::size_t r = 0; r < sig.size(); ++r) {
    rel_offset_.push_back(off);
    std::size_t cells = 1;
    for (int i = 0; i < sig[r].arity; ++i) {
      cells *= static_cast<std::size_t>(n);
      if (cells > (std::size_t{1} << 30)) throw SizeOverflowError("Rep encoding too long");
    }
    off += cells;
  }
  anchor_offset_ = off;
  length_ = off + static_cast<std::size_t>(anchors) * static_cast<std::size_t>(n);
}

std::size_t RepLayout::relation_bit(std::size_t rel, std::span<const int> positions) const {
  std::size_t idx = 0;
  for (int p : positions) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(p);
  return rel_offset_[rel] + idx;
}

std::size_t RepLayout::anchor_bit(int k, int position) const {
  return anchor_offset_ + static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(position);
}

Bits rep_encoding(const Structure& s, const logic::Embedding& e, std::span<const Element> anchors) {
  if (e.size() != s.size()) throw PreconditionError("embedding size differs from universe size");
  RepLayout layout(s.signature(), s.size(), static_cast<int>(anchors.size()));
  Bits bits(layout.length(), 0);
  std::vector<int> pos;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const auto& t : s.tuples(r)) {
      pos.assign(t.size(), 0);
      for (std::size_t k = 0; k < t.size(); ++k) pos[k] = e[t[k]];
      bits[layout.relation_bit(r, pos)] = 1;
    }
  }
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (anchors[k] < 0 || anchors[k] >= s.size()) throw PreconditionError("anchor out of range");
    bits[layout.anchor_bit(static_cast<int>(k), e[anchors[k]])] = 1;
  }
  return bits;
}

}  // namespace modloc::circuit
