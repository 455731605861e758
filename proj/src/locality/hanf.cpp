#include <algorithm>
#include <map>

#include "modloc/errors.hpp"
#include "modloc/gaifman.hpp"
#include "modloc/locality.hpp"

namespace modloc::locality {

std::vector<CanonicalCode> hanf_types(const Structure& s, std::span<const Element> a, int r, CanonicalCache* cache) {
  if (r < 0) throw PreconditionError("radius must be non-negative");
  CanonicalCache local;
  CanonicalCache& memo = cache ? *cache : local;
  GaifmanGraph g(s);
  Tuple anchor(a.begin(), a.end());
  anchor.push_back(0);
  std::vector<CanonicalCode> types;
  types.reserve(s.size());
  for (Element c = 0; c < s.size(); ++c) {
    anchor.back() = c;
    types.push_back(memo.code(neighborhood(s, g, anchor, r)));
  }
  std::sort(types.begin(), types.end());
  return types;
}

bool hanf_equivalent(const Structure& s1, std::span<const Element> a, const Structure& s2,
                     std::span<const Element> b, int r) {
  if (s1.size() != s2.size() || a.size() != b.size()) return false;
  CanonicalCache cache;
  return hanf_types(s1, a, r, &cache) == hanf_types(s2, b, r, &cache);
}

std::vector<HanfViolation> hanf_violations(const std::vector<Structure>& structures,
                                           const std::vector<QueryRelation>& qs, int r) {
  if (structures.size() != qs.size()) throw PreconditionError("one query relation per structure required");
  struct Entry {
    std::size_t structure;
    Tuple tuple;
    bool member;
  };
  CanonicalCache cache;
  std::map<std::pair<int, std::vector<CanonicalCode>>, std::vector<Entry>> classes;
  for (std::size_t i = 0; i < structures.size(); ++i) {
    const auto& q = qs[i];
    if (q.universe() != structures[i].size() || q.arity() != qs.front().arity())
      throw PreconditionError("query relations must share the arity and match their structures");
    for (std::size_t idx = 0; idx < q.capacity(); ++idx) {
      Tuple t = q.tuple_at(idx);
      classes[{structures[i].size(), hanf_types(structures[i], t, r, &cache)}].push_back({i, t, q.contains(t)});
    }
  }
  std::vector<HanfViolation> out;
  for (const auto& [key, entries] : classes)
    for (const auto& yes : entries)
      if (yes.member)
        for (const auto& no : entries)
          if (!no.member) out.push_back({yes.structure, yes.tuple, no.structure, no.tuple});
  std::sort(out.begin(), out.end(), [](const HanfViolation& x, const HanfViolation& y) {
    return std::tie(x.accepted_structure, x.accepted, x.rejected_structure, x.rejected) <
           std::tie(y.accepted_structure, y.accepted, y.rejected_structure, y.rejected);
  });
  return out;
}

}  // namespace modloc::locality
