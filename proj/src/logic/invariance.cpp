#include "modloc/invariance.hpp"

#include <algorithm>
#include <thread>

#include "modloc/rng.hpp"

namespace modloc::logic {

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// Scans the block of permutations starting with `first`, in lexicographic
// order. Returns the index within the block of the first disagreement.
std::optional<std::pair<std::size_t, std::vector<int>>> scan_block(const Evaluator& phi,
                                                                   const Structure& s,
                                                                   std::span<const Element> values,
                                                                   bool reference, int first) {
  const int n = s.size();
  std::vector<int> p;
  p.push_back(first);
  for (int i = 0; i < n; ++i)
    if (i != first) p.push_back(i);
  std::size_t idx = 0;
  do {
    if (phi(s, Embedding(p), values) != reference) return std::make_pair(idx, p);
    ++idx;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return std::nullopt;
}

}  // namespace

InvarianceVerdict check_invariance(const Evaluator& phi, const Structure& s,
                                   std::span<const Element> values, const InvarianceMode& mode) {
  const int n = s.size();
  const Embedding id = Embedding::identity(n);
  const bool reference = phi(s, id, values);
  InvarianceVerdict v;

  if (mode.kind == InvarianceMode::Kind::Exhaustive) {
    if (n > kMaxExhaustiveSize)
      throw SizeOverflowError("exhaustive invariance check refused: n = " + std::to_string(n) +
                              " exceeds " + std::to_string(kMaxExhaustiveSize) + " (" +
                              std::to_string(n) + "! embeddings)");
    const std::size_t block = factorial(n - 1);
    std::vector<std::optional<std::pair<std::size_t, std::vector<int>>>> found(n);
    const int jobs = std::max(1, std::min(mode.jobs, n));
    if (jobs == 1) {
      for (int f = 0; f < n; ++f) {
        found[f] = scan_block(phi, s, values, reference, f);
        if (found[f]) break;
      }
    } else {
      std::vector<std::thread> workers;
      for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
          for (int f = w; f < n; f += jobs) found[f] = scan_block(phi, s, values, reference, f);
        });
      for (auto& t : workers) t.join();
    }
    for (int f = 0; f < n; ++f) {
      if (found[f]) {
        v.invariant = false;
        v.embeddings_checked = static_cast<std::size_t>(f) * block + found[f]->first + 1;
        v.counterexample.emplace(id, Embedding(found[f]->second));
        return v;
      }
    }
    v.embeddings_checked = factorial(n);
    return v;
  }

  Rng rng(mode.seed);
  v.embeddings_checked = 1;
  for (std::size_t i = 1; i < mode.samples; ++i) {
    Embedding e(rng.permutation(n));
    ++v.embeddings_checked;
    if (phi(s, e, values) != reference) {
      v.invariant = false;
      v.counterexample.emplace(id, std::move(e));
      return v;
    }
  }
  return v;
}

InvarianceVerdict check_invariance(const Structure& s, const FormulaPtr& phi, const Assignment& a,
                                   const InvarianceMode& mode, const NumericVocabulary& vocab) {
  Evaluator ev(phi, s.signature(), vocab);
  std::vector<Element> values;
  for (const auto& x : ev.free_order()) {
    auto it = a.find(x);
    if (it == a.end()) throw EvalError("unbound variable " + x);
    values.push_back(it->second);
  }
  return check_invariance(ev, s, values, mode);
}

QueryRelation::QueryRelation(int arity, int universe) : arity_(arity), universe_(universe) {
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) {
    cells *= static_cast<std::size_t>(universe);
    if (cells > (std::size_t{1} << 28)) throw SizeOverflowError("query relation too large");
  }
  member_.assign(cells, 0);
}

std::size_t QueryRelation::index(std::span<const Element> t) const {
  std::size_t idx = 0;
  for (Element e : t) idx = idx * static_cast<std::size_t>(universe_) + static_cast<std::size_t>(e);
  return idx;
}

Tuple QueryRelation::tuple_at(std::size_t index) const {
  Tuple t(arity_);
  for (int k = arity_ - 1; k >= 0; --k) {
    t[k] = static_cast<Element>(index % static_cast<std::size_t>(universe_));
    index /= static_cast<std::size_t>(universe_);
  }
  return t;
}

std::vector<Tuple> QueryRelation::tuples() const {
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) out.push_back(tuple_at(i));
  return out;
}

std::size_t QueryRelation::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1));
}

InvarianceViolation::InvarianceViolation(Tuple tuple, Embedding a, Embedding b)
    : EvalError("query is not invariant at " + tuple_to_string(tuple) + ": embeddings " +
                a.to_string() + " and " + b.to_string() + " disagree"),
      tuple_(std::move(tuple)),
      a_(std::move(a)),
      b_(std::move(b)) {}

QueryRelation query_eval(const Structure& s, const Evaluator& phi, QueryPolicy policy,
                         const InvarianceMode& mode) {
  const int k = static_cast<int>(phi.free_order().size());
  QueryRelation q(k, s.size());
  const Embedding id = Embedding::identity(s.size());
  for (std::size_t i = 0; i < q.capacity(); ++i) {
    Tuple t = q.tuple_at(i);
    if (policy == QueryPolicy::AssertInvariant) {
      auto verdict = check_invariance(phi, s, t, mode);
      if (!verdict.invariant)
        throw InvarianceViolation(t, verdict.counterexample->first, verdict.counterexample->second);
    }
    if (phi(s, id, t)) q.insert(t);
  }
  return q;
}

}  // namespace modloc::logic
