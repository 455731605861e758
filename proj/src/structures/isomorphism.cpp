#include <algorithm>

#include "modloc/isomorphism.hpp"

namespace modloc {

namespace {

struct Incidence {
  std::size_t rel;
  std::size_t index;
};

struct Prepared {
  const Structure* s;
  std::vector<std::vector<int>> invariant;
  std::vector<std::vector<Incidence>> incidences;
  std::vector<Element> order;  // anchors, then BFS from anchors, then the rest
};

Prepared prepare(const AnchoredNeighborhood& nb) {
  const Structure& s = nb.structure;
  const int n = s.size();
  Prepared p{&s, std::vector<std::vector<int>>(n), std::vector<std::vector<Incidence>>(n), {}};
  GaifmanGraph g(s);
  std::vector<Distance> dist(n);
  if (!nb.anchor.empty()) dist = distances_from(g, nb.anchor);

  for (int x = 0; x < n; ++x) p.invariant[x].push_back(dist[x] ? *dist[x] : -1);
  for (int x = 0; x < n; ++x) {
    // anchor positions occupied by x
    int mask_slot = static_cast<int>(p.invariant[x].size());
    p.invariant[x].push_back(0);
    for (std::size_t i = 0; i < nb.anchor.size(); ++i)
      if (nb.anchor[i] == x) p.invariant[x][mask_slot] += 1 << std::min<std::size_t>(i, 30);
  }
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    const int arity = s.signature()[r].arity;
    std::vector<std::vector<int>> counts(n, std::vector<int>(arity, 0));
    const auto& ts = s.tuples(r);
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      const auto& t = ts[ti];
      for (int k = 0; k < arity; ++k) {
        counts[t[k]][k]++;
        bool first = std::find(t.begin(), t.begin() + k, t[k]) == t.begin() + k;
        if (first) p.incidences[t[k]].push_back({r, ti});
      }
    }
    for (int x = 0; x < n; ++x)
      p.invariant[x].insert(p.invariant[x].end(), counts[x].begin(), counts[x].end());
  }

  std::vector<char> placed(n, 0);
  auto place = [&](Element x) {
    if (!placed[x]) {
      placed[x] = 1;
      p.order.push_back(x);
    }
  };
  for (Element a : nb.anchor) place(a);
  for (std::size_t head = 0; head < p.order.size() || static_cast<int>(p.order.size()) < n;) {
    if (head == p.order.size()) {
      for (int x = 0; x < n; ++x)
        if (!placed[x]) {
          place(x);
          break;
        }
    }
    Element x = p.order[head++];
    for (Element y : g.neighbors(x)) place(y);
  }
  return p;
}

class Matcher {
 public:
  Matcher(const AnchoredNeighborhood& a, const AnchoredNeighborhood& b)
      : A(prepare(a)), B(prepare(b)), fwd(a.structure.size(), -1), bwd(b.structure.size(), -1) {
    anchor_a = a.anchor;
    anchor_b = b.anchor;
  }

  std::optional<std::vector<Element>> run() {
    // anchors are forced
    for (std::size_t i = 0; i < anchor_a.size(); ++i) {
      Element x = anchor_a[i], y = anchor_b[i];
      if (fwd[x] == -1 && bwd[y] == -1) {
        if (A.invariant[x] != B.invariant[y]) return std::nullopt;
        fwd[x] = y;
        bwd[y] = x;
        if (!consistent(x, y)) return std::nullopt;
      } else if (fwd[x] != y || bwd[y] != x) {
        return std::nullopt;
      }
    }
    if (search(0)) return fwd;
    return std::nullopt;
  }

 private:
  bool consistent(Element x, Element y) const {
    for (const auto& inc : A.incidences[x]) {
      const auto& t = A.s->tuples(inc.rel)[inc.index];
      buf.resize(t.size());
      bool complete = true;
      for (std::size_t k = 0; k < t.size() && complete; ++k) {
        buf[k] = fwd[t[k]];
        complete = buf[k] != -1;
      }
      if (complete && !B.s->holds(inc.rel, buf)) return false;
    }
    for (const auto& inc : B.incidences[y]) {
      const auto& t = B.s->tuples(inc.rel)[inc.index];
      buf.resize(t.size());
      bool complete = true;
      for (std::size_t k = 0; k < t.size() && complete; ++k) {
        buf[k] = bwd[t[k]];
        complete = buf[k] != -1;
      }
      if (complete && !A.s->holds(inc.rel, buf)) return false;
    }
    return true;
  }

  bool search(std::size_t pos) {
    while (pos < A.order.size() && fwd[A.order[pos]] != -1) ++pos;
    if (pos == A.order.size()) return true;
    Element x = A.order[pos];
    for (Element y = 0; y < static_cast<Element>(bwd.size()); ++y) {
      if (bwd[y] != -1 || A.invariant[x] != B.invariant[y]) continue;
      fwd[x] = y;
      bwd[y] = x;
      if (consistent(x, y) && search(pos + 1)) return true;
      fwd[x] = -1;
      bwd[y] = -1;
    }
    return false;
  }

  Prepared A, B;
  std::vector<Element> fwd, bwd;
  Tuple anchor_a, anchor_b;
  mutable std::vector<Element> buf;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const AnchoredNeighborhood& a,
                                                     const AnchoredNeighborhood& b) {
  const Structure& s = a.structure;
  const Structure& t = b.structure;
  if (!(s.signature() == t.signature())) return std::nullopt;
  if (s.size() != t.size() || a.anchor.size() != b.anchor.size()) return std::nullopt;
  for (std::size_t r = 0; r < s.signature().size(); ++r)
    if (s.tuples(r).size() != t.tuples(r).size()) return std::nullopt;
  return Matcher(a, b).run();
}

bool isomorphic(const AnchoredNeighborhood& a, const AnchoredNeighborhood& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace modloc
