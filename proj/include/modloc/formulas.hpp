#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "modloc/formula.hpp"

namespace modloc::gen {

using logic::FormulaPtr;

// E is the graph of a permutation (in- and out-degree 1).
FormulaPtr phi_cycles();
// Even number of inversions of the permutation given by E under <.
FormulaPtr phi_inversions();
// Disjoint union of directed cycles with an even number of even cycles.
FormulaPtr even_cycles();

// Torus formulas over {E1, E2} for fixed height h.
FormulaPtr same_column(int h, const std::string& a, const std::string& b);
FormulaPtr between(int h, const std::string& a, const std::string& b, const std::string& c);
FormulaPtr column_least(int h, const std::string& a);
FormulaPtr on_turn_path(int h, const std::string& x);
FormulaPtr theta(int h);
FormulaPtr psi_twist(int h);
FormulaPtr torus_twist(int h);  // theta(h) and psi_twist(h)

// Unary query on hoses of height h, free variable x.
FormulaPtr hose_query(int h);
// Unary query on {E, P0, P1} strings, free variable x.
FormulaPtr string_swap_query();
// Sentences over {E, P0, P1, P2}.
FormulaPtr phi_M();
FormulaPtr language_L();
// Path chain x0 -> x1 -> ... -> x_{t-1} with paths of length <= max_len.
FormulaPtr reach_shift(int t, int max_len);

// Named constructions: even_cycles, torus_twist h, hose_query h,
// string_swap_query, language_L, reach_shift t max_len.
FormulaPtr named_formula(std::string_view name, const std::vector<int>& params);
const std::vector<std::string>& named_formula_names();

// Syntactic helpers.
using AtomMap = std::function<FormulaPtr(const logic::Formula& atom)>;  // nullptr keeps the atom
using Guard = std::function<FormulaPtr(const std::string& var)>;
// Replaces atoms through `atoms` and relativizes every quantifier to `guard`
// (when set).
FormulaPtr rewrite(const FormulaPtr& f, const AtomMap& atoms, const Guard& guard = nullptr);
// Renames every bound variable v to v + suffix.
FormulaPtr rename_bound(const FormulaPtr& f, const std::string& suffix);

}  // namespace modloc::gen
