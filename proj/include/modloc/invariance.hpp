#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modloc/errors.hpp"
#include "modloc/evaluate.hpp"

namespace modloc::logic {

inline constexpr std::uint64_t kDefaultInvarianceSeed = 0xC0FFEE;
inline constexpr int kMaxExhaustiveSize = 8;

struct InvarianceMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::size_t samples = 1000;  // total embeddings, identity included
  std::uint64_t seed = kDefaultInvarianceSeed;
  int jobs = 1;

  static InvarianceMode exhaustive(int jobs = 1) { return {Kind::Exhaustive, 0, 0, jobs}; }
  static InvarianceMode sampled(std::size_t count = 1000, std::uint64_t seed = kDefaultInvarianceSeed) {
    return {Kind::Sampled, count, seed, 1};
  }
};

struct InvarianceVerdict {
  bool invariant = true;
  std::size_t embeddings_checked = 0;
  std::optional<std::pair<Embedding, Embedding>> counterexample;
};

// Exhaustive mode enumerates all n! embeddings in lexicographic order and
// reports (identity, first disagreeing embedding), which is the
// lexicographically first failing pair. Sampled mode compares the identity
// against seeded random embeddings.
InvarianceVerdict check_invariance(const Evaluator& phi, const Structure& s,
                                   std::span<const Element> values, const InvarianceMode& mode);
InvarianceVerdict check_invariance(const Structure& s, const FormulaPtr& phi, const Assignment& a,
                                   const InvarianceMode& mode,
                                   const NumericVocabulary& vocab = NumericVocabulary::builtin());

// k-ary relation over {0..n-1}, stored densely.
class QueryRelation {
 public:
  QueryRelation(int arity, int universe);

  int arity() const { return arity_; }
  int universe() const { return universe_; }
  bool contains(std::span<const Element> t) const { return member_[index(t)] != 0; }
  void insert(std::span<const Element> t) { member_[index(t)] = 1; }
  std::vector<Tuple> tuples() const;
  std::size_t count() const;
  std::size_t index(std::span<const Element> t) const;
  Tuple tuple_at(std::size_t index) const;
  std::size_t capacity() const { return member_.size(); }

  bool operator==(const QueryRelation&) const = default;

 private:
  int arity_;
  int universe_;
  std::vector<std::uint8_t> member_;
};

class InvarianceViolation : public EvalError {
 public:
  InvarianceViolation(Tuple tuple, Embedding a, Embedding b);
  const Tuple& tuple() const { return tuple_; }
  const Embedding& first() const { return a_; }
  const Embedding& second() const { return b_; }

 private:
  Tuple tuple_;
  Embedding a_, b_;
};

enum class QueryPolicy { AssertInvariant, IdentityEmbedding };

// All k-tuples (k = |free order|) satisfying phi under the identity embedding.
// Under AssertInvariant every candidate tuple is first run through
// check_invariance with `mode`; a failure throws InvarianceViolation.
QueryRelation query_eval(const Structure& s, const Evaluator& phi, QueryPolicy policy,
                         const InvarianceMode& mode = InvarianceMode::sampled(64));

}  // namespace modloc::logic
