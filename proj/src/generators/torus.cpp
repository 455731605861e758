#include "modloc/errors.hpp"
#include "modloc/generators.hpp"

namespace modloc::gen {

namespace {

void check(const TorusSpec& s) {
  if (s.h < 2 || s.w < 2 || s.k < 0 || s.k >= s.h) throw PreconditionError("torus needs h >= 2, w >= 2, 0 <= k < h");
}

std::vector<Element> successor_map(const Structure& s, std::string_view rel) {
  std::vector<Element> succ(s.size(), -1);
  for (const auto& t : s.tuples(rel)) {
    if (succ[t[0]] >= 0) throw PreconditionError(std::string(rel) + " is not functional");
    succ[t[0]] = t[1];
  }
  return succ;
}

}  // namespace

Structure torus(const TorusSpec& spec) {
  check(spec);
  const int h = spec.h, w = spec.w;
  std::vector<Tuple> e1, e2;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      e1.push_back({spec.element(i, j), spec.element((i + 1) % h, j)});
      if (j + 1 < w) e2.push_back({spec.element(i, j), spec.element(i, j + 1)});
      else e2.push_back({spec.element(i, w - 1), spec.element((i + spec.k) % h, 0)});
    }
  return Structure(Signature({{"E1", 2}, {"E2", 2}}), h * w, {std::move(e1), std::move(e2)});
}

int turn(const Structure& torus, int h, const std::vector<Element>& reps) {
  const auto s1 = successor_map(torus, "E1");
  const auto s2 = successor_map(torus, "E2");
  const int w = static_cast<int>(reps.size());
  int total = 0;
  for (int j = 0; j < w; ++j) {
    const Element target = s2[reps[(j + w - 1) % w]];
    Element x = reps[j];
    int len = 0;
    while (x != target) {
      if (len >= h - 1 || x < 0) throw PreconditionError("turn path does not close within the column");
      x = s1[x];
      ++len;
    }
    total += len;
  }
  return total;
}

Hose hose(int h, int w) {
  TorusSpec spec{h, w, 0};
  check(spec);
  std::vector<Tuple> e1, e2;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      e1.push_back({spec.element(i, j), spec.element((i + 1) % h, j)});
      if (j + 1 < w) e2.push_back({spec.element(i, j), spec.element(i, j + 1)});
    }
  Structure s(Signature({{"R", 1}, {"E1", 2}, {"E2", 2}}), h * w,
              {{{spec.element(0, w - 1)}}, std::move(e1), std::move(e2)});
  return {std::move(s), spec.element(0, 0), spec.element(1, 0)};
}

}  // namespace modloc::gen
