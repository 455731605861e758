#pragma once

#include <cstddef>
#include <cstdint>

#include "modloc/circuit.hpp"

namespace modloc::circuit::detail {

// Lane layout: a block holds `words` uint64 words per input. Input nu of
// block b starts at in[(b * width + nu - 1) * words]; the output of block b
// is written to out[b * words].
void eval_blocks_scalar(const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out);
void eval_blocks_portable(const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out);
void eval_blocks_avx2(const Circuit& c, const std::uint64_t* in, std::size_t blocks, std::uint64_t* out);

}  // namespace modloc::circuit::detail
