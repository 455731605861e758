#include <vector>

#include "kernels.hpp"

namespace modloc::circuit::detail {

namespace {

struct Ops64 {
  using V = std::uint64_t;
  static constexpr std::size_t kWords = 1;
  static V load(const std::uint64_t* p) { return *p; }
  static void store(std::uint64_t* p, V v) { *p = v; }
  static V zero() { return 0; }
  static V ones() { return ~std::uint64_t{0}; }
  static V bit_and(V a, V b) { return a & b; }
  static V bit_or(V a, V b) { return a | b; }
  static V bit_not(V a) { return ~a; }
  static V and_not(V a, V b) { return ~a & b; }
};

#include "lanes.hpp"

}  // namespace

void eval_blocks_portable(const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out) {
  eval_lane_blocks<Ops64>(c, in, blocks, out);
}

}  // namespace modloc::circuit::detail
