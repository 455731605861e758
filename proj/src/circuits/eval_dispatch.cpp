#include <cstdlib>
#include <string>

#include "kernels.hpp"
#include "modloc/circuit_eval.hpp"
#include "modloc/errors.hpp"

namespace modloc::circuit {

#ifndef MODLOC_HAVE_AVX2
namespace detail {
void eval_blocks_avx2(const Circuit&, const std::uint64_t*, std::size_t, std::uint64_t*) {
  throw PreconditionError("AVX2 kernel not compiled in");
}
}  // namespace detail
#endif

namespace {

std::size_t words_per_block(Kernel k) { return k == Kernel::Avx2 ? 4 : 1; }

void run_blocks(Kernel k, const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out) {
  switch (k) {
    case Kernel::Scalar: detail::eval_blocks_scalar(c, in, blocks, out); break;
    case Kernel::Portable64: detail::eval_blocks_portable(c, in, blocks, out); break;
    case Kernel::Avx2: detail::eval_blocks_avx2(c, in, blocks, out); break;
  }
}

// Bit b of kPattern[k] is bit k of b, for the six low input bits.
constexpr std::uint64_t kPattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                       0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                       0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

constexpr std::size_t kChunkBlocks = 64;

}  // namespace

bool kernel_available(Kernel k) {
  if (k != Kernel::Avx2) return true;
#if defined(MODLOC_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel default_kernel() {
  if (const char* env = std::getenv("MODLOC_KERNEL")) {
    std::string v(env);
    if (v == "scalar") return Kernel::Scalar;
    if (v == "portable") return Kernel::Portable64;
    if (v == "avx2" && kernel_available(Kernel::Avx2)) return Kernel::Avx2;
  }
  return kernel_available(Kernel::Avx2) ? Kernel::Avx2 : Kernel::Portable64;
}

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Scalar: return "scalar";
    case Kernel::Portable64: return "portable64";
    case Kernel::Avx2: return "avx2";
  }
  return "?";
}

std::vector<std::uint8_t> sweep(const Circuit& c, std::uint64_t first, std::uint64_t count, Kernel k) {
  if (!kernel_available(k)) throw PreconditionError(std::string("kernel unavailable: ") + kernel_name(k));
  const std::size_t width = static_cast<std::size_t>(c.input_width());
  if (width < 64 && count > 0 && ((first + count - 1) >> width) != 0)
    throw PreconditionError("sweep range exceeds 2^m");
  const std::size_t W = words_per_block(k);
  const std::uint64_t lanes_per_block = 64 * W;
  const std::uint64_t start = first & ~std::uint64_t{63};
  const std::uint64_t stop = first + count;
  std::vector<std::uint8_t> result(count);
  std::vector<std::uint64_t> in(kChunkBlocks * width * W);
  std::vector<std::uint64_t> out(kChunkBlocks * W);
  for (std::uint64_t x0 = start; x0 < stop; x0 += kChunkBlocks * lanes_per_block) {
    std::size_t blocks = 0;
    for (; blocks < kChunkBlocks && x0 + blocks * lanes_per_block < stop; ++blocks) {
      for (std::size_t q = 0; q < W; ++q) {
        const std::uint64_t base = x0 + blocks * lanes_per_block + 64 * q;
        for (std::size_t nu = 0; nu < width; ++nu) {
          std::uint64_t word;
          if (nu < 6) word = kPattern[nu];
          else word = ((base >> nu) & 1) ? ~std::uint64_t{0} : 0;
          in[(blocks * width + nu) * W + q] = word;
        }
      }
    }
    run_blocks(k, c, in.data(), blocks, out.data());
    for (std::size_t i = 0; i < blocks * lanes_per_block; ++i) {
      const std::uint64_t x = x0 + i;
      if (x < first || x >= stop) continue;
      result[x - first] = static_cast<std::uint8_t>((out[i / 64] >> (i % 64)) & 1);
    }
  }
  return result;
}

std::vector<std::uint8_t> eval_many(const Circuit& c, const std::vector<Bits>& inputs, Kernel k) {
  if (!kernel_available(k)) throw PreconditionError(std::string("kernel unavailable: ") + kernel_name(k));
  const std::size_t width = static_cast<std::size_t>(c.input_width());
  for (const auto& b : inputs)
    if (b.size() != width) throw PreconditionError("input width mismatch in batch evaluation");
  const std::size_t W = words_per_block(k);
  const std::size_t lanes_per_block = 64 * W;
  const std::size_t blocks = (inputs.size() + lanes_per_block - 1) / lanes_per_block;
  std::vector<std::uint64_t> in(blocks * width * W, 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::size_t b = i / lanes_per_block, q = (i % lanes_per_block) / 64, bit = i % 64;
    for (std::size_t nu = 0; nu < width; ++nu)
      if (inputs[i][nu]) in[(b * width + nu) * W + q] |= std::uint64_t{1} << bit;
  }
  std::vector<std::uint64_t> out(blocks * W, 0);
  run_blocks(k, c, in.data(), blocks, out.data());
  std::vector<std::uint8_t> result(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) result[i] = (out[i / 64] >> (i % 64)) & 1;
  return result;
}

}  // namespace modloc::circuit
