#include <algorithm>
#include <map>

#include "modloc/isomorphism.hpp"

namespace modloc {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 3; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

// Individualization-refinement search. Colors are always canonical ranks, so
// the set of leaves reached is invariant under isomorphism and the minimum
// leaf encoding is a canonical form.
class Canonizer {
 public:
  Canonizer(const Structure& s, const Tuple& anchor) : s_(s), n_(s.size()), anchor_(anchor) {
    incidences_.resize(n_);
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
      const auto& ts = s.tuples(r);
      for (std::size_t ti = 0; ti < ts.size(); ++ti)
        for (std::size_t k = 0; k < ts[ti].size(); ++k)
          incidences_[ts[ti][k]].push_back({static_cast<int>(r), static_cast<int>(ti),
                                            static_cast<int>(k)});
    }
  }

  CanonicalCode run() {
    GaifmanGraph g(s_);
    std::vector<Distance> dist(n_);
    if (!anchor_.empty()) dist = distances_from(g, anchor_);
    std::vector<std::vector<int>> sig(n_);
    for (int x = 0; x < n_; ++x) {
      sig[x].push_back(dist[x] ? *dist[x] : n_ + 1);
      for (std::size_t i = 0; i < anchor_.size(); ++i)
        if (anchor_[i] == x) sig[x].push_back(static_cast<int>(i));
    }
    search(rank(sig));
    return best_;
  }

  std::string encode(const std::vector<int>& label) const {
    std::string out;
    put_u32(out, static_cast<std::uint32_t>(n_));
    put_u32(out, static_cast<std::uint32_t>(anchor_.size()));
    for (Element a : anchor_) put_u32(out, static_cast<std::uint32_t>(label[a]));
    for (std::size_t r = 0; r < s_.signature().size(); ++r) {
      const int arity = s_.signature()[r].arity;
      std::size_t cells = 1;
      for (int k = 0; k < arity; ++k) cells *= static_cast<std::size_t>(n_);
      std::string bits((cells + 7) / 8, '\0');
      for (const auto& t : s_.tuples(r)) {
        std::size_t idx = 0;
        for (Element e : t) idx = idx * n_ + label[e];
        bits[idx / 8] = static_cast<char>(bits[idx / 8] | (0x80 >> (idx % 8)));
      }
      put_u32(out, static_cast<std::uint32_t>(arity));
      out += bits;
    }
    return out;
  }

 private:
  struct Inc {
    int rel, tuple, pos;
  };

  static std::vector<int> rank(const std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> out(sig.size());
    for (std::size_t x = 0; x < sig.size(); ++x)
      out[x] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[x]) - keys.begin());
    return out;
  }

  static int class_count(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  std::vector<int> refine(std::vector<int> color) const {
    int classes = class_count(color);
    for (;;) {
      std::vector<std::vector<int>> sig(n_);
      for (int x = 0; x < n_; ++x) {
        std::vector<std::vector<int>> entries;
        entries.reserve(incidences_[x].size());
        for (const auto& inc : incidences_[x]) {
          const auto& t = s_.tuples(inc.rel)[inc.tuple];
          std::vector<int> e{inc.rel, inc.pos};
          for (Element y : t) e.push_back(color[y]);
          entries.push_back(std::move(e));
        }
        std::sort(entries.begin(), entries.end());
        sig[x].push_back(color[x]);
        for (const auto& e : entries) sig[x].insert(sig[x].end(), e.begin(), e.end());
      }
      auto next = rank(sig);
      int next_classes = class_count(next);
      if (next_classes == classes) return next;
      color = std::move(next);
      classes = next_classes;
    }
  }

  void search(std::vector<int> color) {
    color = refine(std::move(color));
    const int classes = class_count(color);
    if (classes == n_) {
      std::string code = encode(color);
      if (!have_ || code < best_) {
        best_ = std::move(code);
        have_ = true;
      }
      return;
    }
    std::vector<int> size(classes, 0);
    for (int c : color) size[c]++;
    int cell = 0;
    while (size[cell] < 2) ++cell;
    for (int x = 0; x < n_; ++x) {
      if (color[x] != cell) continue;
      std::vector<int> split(n_);
      for (int y = 0; y < n_; ++y) split[y] = 2 * color[y] + (color[y] == cell && y != x ? 1 : 0);
      std::vector<std::vector<int>> sig(n_);
      for (int y = 0; y < n_; ++y) sig[y] = {split[y]};
      search(rank(sig));
    }
  }

  const Structure& s_;
  int n_;
  const Tuple& anchor_;
  std::vector<std::vector<Inc>> incidences_;
  CanonicalCode best_;
  bool have_ = false;
};

std::vector<int> identity_label(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace

CanonicalCode canonical_form(const AnchoredNeighborhood& n) {
  return Canonizer(n.structure, n.anchor).run();
}

CanonicalCode canonical_form(const Structure& s, std::span<const Element> anchor) {
  Tuple a(anchor.begin(), anchor.end());
  return Canonizer(s, a).run();
}

const CanonicalCode& CanonicalCache::code(const AnchoredNeighborhood& n) {
  Canonizer c(n.structure, n.anchor);
  std::string raw = c.encode(identity_label(n.structure.size()));
  auto it = memo_.find(raw);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(std::move(raw), c.run()).first->second;
}

}  // namespace modloc
