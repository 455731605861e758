#include <immintrin.h>

#include <vector>

#include "kernels.hpp"

namespace modloc::circuit::detail {

namespace {

struct OpsAvx2 {
  using V = __m256i;
  static constexpr std::size_t kWords = 4;
  static V load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
  static void store(std::uint64_t* p, V v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }
  static V zero() { return _mm256_setzero_si256(); }
  static V ones() { return _mm256_set1_epi64x(-1); }
  static V bit_and(V a, V b) { return _mm256_and_si256(a, b); }
  static V bit_or(V a, V b) { return _mm256_or_si256(a, b); }
  static V bit_not(V a) { return _mm256_xor_si256(a, ones()); }
  static V and_not(V a, V b) { return _mm256_andnot_si256(a, b); }
};

#include "lanes.hpp"

}  // namespace

void eval_blocks_avx2(const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out) {
  eval_lane_blocks<OpsAvx2>(c, in, blocks, out);
}

}  // namespace modloc::circuit::detail
