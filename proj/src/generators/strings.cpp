#include <algorithm>
#include <regex>

#include "modloc/errors.hpp"
#include "modloc/generators.hpp"

namespace modloc::gen {

Signature string_signature(std::string_view alphabet) {
  std::vector<RelationSymbol> rels{{"E", 2}};
  for (char c : alphabet) rels.push_back({std::string("P") + c, 1});
  return Signature(std::move(rels));
}

Structure string_structure(std::string_view word, std::string_view alphabet) {
  if (word.empty()) throw PreconditionError("string structures need a non-empty word");
  std::string alpha(alphabet);
  if (alpha.empty()) {
    alpha = std::string(word);
    std::sort(alpha.begin(), alpha.end());
    alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());
    if (alpha == "0" || alpha == "1" || alpha == "01") alpha = "01";
  }
  const int n = static_cast<int>(word.size());
  std::vector<std::vector<Tuple>> rels(1 + alpha.size());
  for (int i = 0; i + 1 < n; ++i) rels[0].push_back({i, i + 1});
  for (int i = 0; i < n; ++i) {
    auto pos = alpha.find(word[i]);
    if (pos == std::string::npos) throw PreconditionError(std::string("letter '") + word[i] + "' not in alphabet");
    rels[1 + pos].push_back({i});
  }
  return Structure(string_signature(alpha), n, std::move(rels));
}

Structure string_structure(const std::vector<int>& word, int alphabet_size) {
  if (word.empty()) throw PreconditionError("string structures need a non-empty word");
  std::vector<RelationSymbol> sig{{"E", 2}};
  for (int a = 0; a < alphabet_size; ++a) sig.push_back({"P" + std::to_string(a), 1});
  const int n = static_cast<int>(word.size());
  std::vector<std::vector<Tuple>> rels(1 + alphabet_size);
  for (int i = 0; i + 1 < n; ++i) rels[0].push_back({i, i + 1});
  for (int i = 0; i < n; ++i) {
    if (word[i] < 0 || word[i] >= alphabet_size) throw PreconditionError("symbol outside the alphabet");
    rels[1 + word[i]].push_back({i});
  }
  return Structure(Signature(std::move(sig)), n, std::move(rels));
}

namespace {

std::string rep(char c, int k) { return std::string(static_cast<std::size_t>(k), c); }

struct Blocks {
  std::string x, y1, y2, y3, z;
};

Blocks blocks(int ell) {
  if (ell < 1) throw PreconditionError("scale l must be >= 1");
  return {rep('1', ell), rep('1', ell) + "2" + rep('0', ell), rep('0', ell) + rep('1', ell),
          rep('1', ell) + rep('0', ell), rep('0', ell)};
}

}  // namespace

std::string w_ell(int ell) {
  if (ell < 1) throw PreconditionError("scale l must be >= 1");
  return rep('1', ell) + rep('0', ell) + rep('1', ell) + rep('0', ell);
}

std::string u_ell(int ell) {
  auto b = blocks(ell);
  return b.x + b.y1 + b.y2 + b.y3 + b.z;
}

std::string v_ell(int ell) {
  auto b = blocks(ell);
  return b.x + b.y3 + b.y2 + b.y1 + b.z;
}

HanfWitness hanf_witness(int ell) {
  auto b = blocks(ell);
  HanfWitness out{u_ell(ell), v_ell(ell), {}};
  // block start offsets in u (x y1 y2 y3 z) and v (x y3 y2 y1 z)
  const int lx = static_cast<int>(b.x.size()), l1 = static_cast<int>(b.y1.size()),
            l2 = static_cast<int>(b.y2.size()), l3 = static_cast<int>(b.y3.size()),
            lz = static_cast<int>(b.z.size());
  const int lens[5] = {lx, l1, l2, l3, lz};
  const int u_start[5] = {0, lx, lx + l1, lx + l1 + l2, lx + l1 + l2 + l3};
  const int v_start[5] = {0, lx + l3 + l2, lx + l3, lx, lx + l1 + l2 + l3};
  out.beta.resize(out.u.size());
  for (int blk = 0; blk < 5; ++blk)
    for (int o = 0; o < lens[blk]; ++o) out.beta[u_start[blk] + o] = v_start[blk] + o;
  return out;
}

bool in_left(std::string_view w) {
  static const std::regex re("1+20+1+0+");
  return std::regex_match(w.begin(), w.end(), re);
}

bool in_right(std::string_view w) {
  static const std::regex re("1+0+1+20+");
  return std::regex_match(w.begin(), w.end(), re);
}

bool in_M(std::string_view w) { return in_left(w) || in_right(w); }

bool in_L(std::string_view w) {
  const auto ones = std::count(w.begin(), w.end(), '1');
  return (in_right(w) && ones % 2 == 0) || (in_left(w) && ones % 2 == 1);
}

}  // namespace modloc::gen
