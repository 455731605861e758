#pragma once

#include <string_view>

#include "modloc/formula.hpp"
#include "modloc/numeric.hpp"
#include "modloc/structure.hpp"

namespace modloc::logic {

// Heads naming a predicate of `vocab` become NumAtom nodes, all other
// non-keyword heads become relation atoms. Throws ParseError.
FormulaPtr parse_formula(std::string_view text,
                         const NumericVocabulary& vocab = NumericVocabulary::builtin());

// Relation atoms must exist in `sig` and numeric atoms in `vocab`, with
// matching arity. Throws SymbolError.
void check_symbols(const Formula& f, const Signature& sig, const NumericVocabulary& vocab);

FormulaPtr parse_formula(std::string_view text, const Signature& sig,
                         const NumericVocabulary& vocab = NumericVocabulary::builtin());

// A formula file: optional `table: NAME/r` headers (tuples follow on the same
// line or on continuation lines), then one formula. The returned vocabulary is
// the built-in one plus the tables.
struct FormulaFile {
  FormulaPtr formula;
  NumericVocabulary vocabulary;
};
FormulaFile parse_formula_file(std::string_view text);

}  // namespace modloc::logic
