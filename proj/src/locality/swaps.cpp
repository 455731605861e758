#include <algorithm>

#include "modloc/errors.hpp"
#include "modloc/gaifman.hpp"
#include "modloc/generators.hpp"
#include "modloc/locality.hpp"

namespace modloc::locality {

namespace {

std::optional<std::string> swap_in(const Structure& sw, const GaifmanGraph& g, CanonicalCache& cache,
                                   std::string_view w, const SwapCuts& c, int r) {
  const Element pos[4] = {c.i - 1, c.j - 1, c.i2 - 1, c.j2 - 1};
  std::vector<std::vector<Element>> balls;
  for (Element p : pos) {
    Element a[1] = {p};
    balls.push_back(ball(g, a, r));
  }
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) {
      std::vector<Element> common;
      std::set_intersection(balls[x].begin(), balls[x].end(), balls[y].begin(), balls[y].end(),
                            std::back_inserter(common));
      if (!common.empty()) return std::nullopt;
    }
  auto code = [&](Element p) {
    Element a[1] = {p};
    return cache.code(neighborhood(sw, g, a, r));
  };
  if (code(pos[0]) != code(pos[2]) || code(pos[1]) != code(pos[3])) return std::nullopt;
  std::string out(w.substr(0, c.i));
  out += w.substr(c.i2, c.j2 - c.i2);
  out += w.substr(c.j, c.i2 - c.j);
  out += w.substr(c.i, c.j - c.i);
  out += w.substr(c.j2);
  return out;
}

void check_cuts(std::string_view w, const SwapCuts& c) {
  const int n = static_cast<int>(w.size());
  if (!(1 <= c.i && c.i < c.j && c.j < c.i2 && c.i2 < c.j2 && c.j2 <= n))
    throw PreconditionError("swap cuts must satisfy 1 <= i < j < i' < j' <= |w|");
}

}  // namespace

std::optional<std::string> disjoint_swap(std::string_view w, const SwapCuts& cuts, int r) {
  check_cuts(w, cuts);
  if (r < 0) throw PreconditionError("radius must be non-negative");
  Structure sw = gen::string_structure(w);
  GaifmanGraph g(sw);
  CanonicalCache cache;
  return swap_in(sw, g, cache, w, cuts, r);
}

std::vector<SwapViolation> swap_closure_violations(const Acceptor& accept, std::string_view alphabet, int n,
                                                   int r) {
  if (alphabet.empty() || n < 1) throw PreconditionError("need a non-empty alphabet and n >= 1");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= alphabet.size();
    if (total > (std::size_t{1} << 22)) throw SizeOverflowError("too many strings to enumerate");
  }
  auto word_at = [&](std::size_t idx) {
    std::string w(static_cast<std::size_t>(n), alphabet[0]);
    for (int p = n - 1; p >= 0; --p) {
      w[p] = alphabet[idx % alphabet.size()];
      idx /= alphabet.size();
    }
    return w;
  };
  auto index_of = [&](std::string_view w) {
    std::size_t idx = 0;
    for (char ch : w) idx = idx * alphabet.size() + alphabet.find(ch);
    return idx;
  };
  std::vector<char> accepted(total);
  for (std::size_t idx = 0; idx < total; ++idx) accepted[idx] = accept(word_at(idx));
  std::vector<SwapViolation> out;
  CanonicalCache cache;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!accepted[idx]) continue;
    const std::string w = word_at(idx);
    Structure sw = gen::string_structure(w, alphabet);
    GaifmanGraph g(sw);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int i2 = j + 1; i2 <= n; ++i2)
          for (int j2 = i2 + 1; j2 <= n; ++j2) {
            SwapCuts cuts{i, j, i2, j2};
            auto swapped = swap_in(sw, g, cache, w, cuts, r);
            if (swapped && !accepted[index_of(*swapped)]) out.push_back({w, *swapped, cuts});
          }
  }
  return out;
}

WordAcceptor arity_reduce(StringQuery q, AssignAlphabet alphabet) {
  if (alphabet.k < 1 || alphabet.sigma < 1) throw PreconditionError("arity reduction needs k >= 1");
  return [q = std::move(q), alphabet](const std::vector<int>& w) {
    Tuple occ(alphabet.k, -1);
    std::vector<int> letters;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] < 0 || w[p] >= alphabet.size()) throw PreconditionError("symbol outside the alphabet");
      letters.push_back(alphabet.letter(w[p]));
      for (int i = 0; i < alphabet.k; ++i)
        if (alphabet.mask(w[p]) & (1u << i)) {
          if (occ[i] >= 0) return false;
          occ[i] = static_cast<Element>(p);
        }
    }
    for (Element e : occ)
      if (e < 0) return false;
    return q(letters, occ);
  };
}

}  // namespace modloc::locality
