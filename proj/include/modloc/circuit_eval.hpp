#pragma once

#include <cstdint>
#include <vector>

#include "modloc/circuit.hpp"

namespace modloc::circuit {

// Batch evaluation kernels. Scalar is the reference; Portable64 evaluates 64
// inputs per pass with bitsliced uint64 lanes; Avx2 evaluates 256 per pass.
enum class Kernel { Scalar, Portable64, Avx2 };

bool kernel_available(Kernel k);
// Best available kernel, overridable with MODLOC_KERNEL=scalar|portable|avx2.
Kernel default_kernel();
const char* kernel_name(Kernel k);

// Entry i is C(x) for x = first + i, where input w_nu is bit nu-1 of x.
std::vector<std::uint8_t> sweep(const Circuit& c, std::uint64_t first, std::uint64_t count,
                                Kernel k = default_kernel());

// Entry i is C(inputs[i]).
std::vector<std::uint8_t> eval_many(const Circuit& c, const std::vector<Bits>& inputs,
                                    Kernel k = default_kernel());

}  // namespace modloc::circuit
