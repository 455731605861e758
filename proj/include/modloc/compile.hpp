#pragma once

#include <string>
#include <vector>

#include "modloc/circuit.hpp"
#include "modloc/formula.hpp"
#include "modloc/numeric.hpp"
#include "modloc/rep.hpp"

namespace modloc::circuit {

// Circuit C over RepLayout(sig, n, K) inputs, K = free_order.size(), with
// C(Rep(A, a)) = [A |= phi[a]] under the embedding used to build Rep.
// Negations are pushed to the leaves; quantifiers become OR/AND/MOD gates
// over one child per position; equalities and numerical atoms fold to
// constants.
Circuit compile(const logic::FormulaPtr& phi, const Signature& sig, int n,
                const std::vector<std::string>& free_order,
                const logic::NumericVocabulary& vocab = logic::NumericVocabulary::builtin());

}  // namespace modloc::circuit
