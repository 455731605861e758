#include "kernels.hpp"

namespace modloc::circuit::detail {

void eval_blocks_scalar(const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out) {
  const std::size_t width = static_cast<std::size_t>(c.input_width());
  Bits bits(width);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t word = 0;
    for (unsigned lane = 0; lane < 64; ++lane) {
      for (std::size_t k = 0; k < width; ++k) bits[k] = (in[b * width + k] >> lane) & 1;
      if (eval_circuit(c, bits)) word |= std::uint64_t{1} << lane;
    }
    out[b] = word;
  }
}

}  // namespace modloc::circuit::detail
