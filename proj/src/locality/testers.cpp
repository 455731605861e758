#include <algorithm>
#include <map>

#include "modloc/errors.hpp"
#include "modloc/gaifman.hpp"
#include "modloc/locality.hpp"

namespace modloc::locality {

namespace {

struct AnchorInfo {
  Tuple tuple;
  bool member = false;
  std::vector<Element> ball;  // sorted
};

// All k-tuples grouped by the canonical form of their anchored r-neighborhood,
// groups and members in lexicographic order of the first tuple.
std::vector<std::vector<AnchorInfo>> type_classes(const QueryRelation& q, const Structure& s, int r, int k) {
  if (r < 0) throw PreconditionError("radius must be non-negative");
  if (q.universe() != s.size()) throw PreconditionError("query relation does not match the structure size");
  GaifmanGraph g(s);
  CanonicalCache cache;
  QueryRelation shape(k, s.size());
  std::map<CanonicalCode, std::size_t> index;
  std::vector<std::vector<AnchorInfo>> classes;
  for (std::size_t i = 0; i < shape.capacity(); ++i) {
    Tuple t = shape.tuple_at(i);
    const CanonicalCode& code = cache.code(neighborhood(s, g, t, r));
    auto [it, fresh] = index.emplace(code, classes.size());
    if (fresh) classes.emplace_back();
    AnchorInfo info{t, false, ball(g, t, r)};
    if (k == q.arity()) info.member = q.contains(t);
    classes[it->second].push_back(std::move(info));
  }
  return classes;
}

bool disjoint(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

std::vector<PairViolation> pair_violations(const QueryRelation& q, const Structure& s, int r, bool need_disjoint) {
  std::vector<PairViolation> out;
  for (const auto& cls : type_classes(q, s, r, q.arity()))
    for (std::size_t x = 0; x < cls.size(); ++x)
      for (std::size_t y = x + 1; y < cls.size(); ++y) {
        if (cls[x].member == cls[y].member) continue;
        if (need_disjoint && !disjoint(cls[x].ball, cls[y].ball)) continue;
        out.push_back({cls[x].tuple, cls[y].tuple, cls[x].member});
      }
  std::sort(out.begin(), out.end(), [](const PairViolation& a, const PairViolation& b) {
    return std::tie(a.a, a.b) < std::tie(b.a, b.b);
  });
  return out;
}

Tuple flatten(const std::vector<Tuple>& blocks, std::size_t rotate) {
  Tuple out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Tuple& b = blocks[(i + rotate) % blocks.size()];
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

}  // namespace

std::vector<PairViolation> gaifman_violations(const QueryRelation& q, const Structure& s, int r) {
  return pair_violations(q, s, r, false);
}

std::vector<PairViolation> weak_gaifman_violations(const QueryRelation& q, const Structure& s, int r) {
  return pair_violations(q, s, r, true);
}

std::vector<ShiftViolation> shift_violations(const QueryRelation& q, const Structure& s, int r, int t, int k) {
  if (t < 2) throw PreconditionError("shift period t must be >= 2");
  if (k < 1 || k * t != q.arity()) throw PreconditionError("query arity must equal k*t");
  std::vector<ShiftViolation> out;
  for (const auto& cls : type_classes(q, s, r, k)) {
    const std::size_t c = cls.size();
    if (c < static_cast<std::size_t>(t)) continue;
    std::vector<std::vector<char>> apart(c, std::vector<char>(c, 0));
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t y = 0; y < c; ++y) apart[x][y] = x != y && disjoint(cls[x].ball, cls[y].ball);
    std::vector<std::size_t> chosen;
    std::vector<Tuple> blocks;
    auto extend = [&](auto&& self) -> void {
      if (chosen.size() == static_cast<std::size_t>(t)) {
        const bool here = q.contains(flatten(blocks, 0));
        if (here != q.contains(flatten(blocks, 1))) out.push_back({blocks, here});
        return;
      }
      for (std::size_t y = 0; y < c; ++y) {
        bool ok = true;
        for (std::size_t x : chosen) ok = ok && apart[x][y];
        if (!ok) continue;
        chosen.push_back(y);
        blocks.push_back(cls[y].tuple);
        self(self);
        chosen.pop_back();
        blocks.pop_back();
      }
    };
    extend(extend);
  }
  std::sort(out.begin(), out.end(),
            [](const ShiftViolation& a, const ShiftViolation& b) { return a.blocks < b.blocks; });
  return out;
}

bool reverify(const PairViolation& v, const QueryRelation& q, const Structure& s, int r, bool need_disjoint) {
  if (q.contains(v.a) != v.a_member || q.contains(v.b) == v.a_member) return false;
  GaifmanGraph g(s);
  if (need_disjoint && !disjoint(ball(g, v.a, r), ball(g, v.b, r))) return false;
  return find_isomorphism(neighborhood(s, g, v.a, r), neighborhood(s, g, v.b, r)).has_value();
}

bool reverify(const ShiftViolation& v, const QueryRelation& q, const Structure& s, int r) {
  const std::size_t t = v.blocks.size();
  if (t < 2) return false;
  if (q.contains(flatten(v.blocks, 0)) != v.member || q.contains(flatten(v.blocks, 1)) == v.member) return false;
  GaifmanGraph g(s);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!disjoint(ball(g, v.blocks[i], r), ball(g, v.blocks[j], r))) return false;
      if (!find_isomorphism(neighborhood(s, g, v.blocks[i], r), neighborhood(s, g, v.blocks[j], r))) return false;
    }
  return true;
}

}  // namespace modloc::locality
