#include "modloc/structure.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "modloc/errors.hpp"

namespace modloc {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '/' || c == '(' || c == ')' ||
        c == ',' || c == ':')
      return false;
  }
  return true;
}

}  // namespace

Signature::Signature(std::vector<RelationSymbol> relations) : relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& r : relations_) {
    if (!valid_identifier(r.name)) throw SymbolError("invalid relation name '" + r.name + "'");
    if (r.arity < 1) throw SymbolError("relation " + r.name + " must have arity >= 1");
    if (!seen.insert(r.name).second) throw SymbolError("duplicate relation name " + r.name);
  }
}

Signature Signature::parse(std::string_view text) {
  std::vector<RelationSymbol> rels;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view word = text.substr(start, i - start);
    auto slash = word.rfind('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == word.size())
      throw ParseError("expected NAME/arity in signature, got '" + std::string(word) + "'", start);
    int arity = 0;
    for (char c : word.substr(slash + 1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad arity in '" + std::string(word) + "'", start);
      arity = arity * 10 + (c - '0');
      if (arity > 64) throw ParseError("arity too large in '" + std::string(word) + "'", start);
    }
    rels.push_back({std::string(word.substr(0, slash)), arity});
  }
  return Signature(std::move(rels));
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw SymbolError("unknown relation symbol " + std::string(name));
  return *i;
}

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (i) out += ' ';
    out += relations_[i].name + "/" + std::to_string(relations_[i].arity);
  }
  return out;
}

Structure::Structure(Signature signature, int size)
    : sig_(std::move(signature)), n_(size), rels_(sig_.size()) {
  normalize_and_index();
}

Structure::Structure(Signature signature, int size, std::vector<std::vector<Tuple>> relations)
    : sig_(std::move(signature)), n_(size), rels_(std::move(relations)) {
  if (rels_.size() != sig_.size())
    throw PreconditionError("relation list does not match the signature");
  normalize_and_index();
}

void Structure::normalize_and_index() {
  if (n_ < 1) throw PreconditionError("universe must be non-empty");
  dense_.assign(sig_.size(), {});
  for (std::size_t r = 0; r < sig_.size(); ++r) {
    auto& ts = rels_[r];
    const int arity = sig_[r].arity;
    for (const auto& t : ts) {
      if (static_cast<int>(t.size()) != arity)
        throw PreconditionError("tuple of wrong arity for relation " + sig_[r].name);
      for (Element e : t)
        if (e < 0 || e >= n_)
          throw PreconditionError("tuple component out of range in relation " + sig_[r].name);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::uint64_t cells = 1;
    bool fits = true;
    for (int k = 0; k < arity && fits; ++k) {
      cells *= static_cast<std::uint64_t>(n_);
      if (cells > kDenseLimit) fits = false;
    }
    if (fits) {
      auto& d = dense_[r];
      d.assign(cells, 0);
      for (const auto& t : ts) {
        std::uint64_t idx = 0;
        for (Element e : t) idx = idx * n_ + e;
        d[idx] = 1;
      }
    }
  }
}

const std::vector<Tuple>& Structure::tuples(std::string_view name) const {
  return rels_[sig_.index_of(name)];
}

bool Structure::holds(std::size_t rel, std::span<const Element> tuple) const {
  const auto& d = dense_[rel];
  if (!d.empty()) {
    std::uint64_t idx = 0;
    for (Element e : tuple) idx = idx * n_ + e;
    return d[idx] != 0;
  }
  const auto& ts = rels_[rel];
  return std::binary_search(ts.begin(), ts.end(), tuple, [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
}

std::size_t Structure::tuple_count() const {
  std::size_t c = 0;
  for (const auto& r : rels_) c += r.size();
  return c;
}

Structure Structure::with_relation(std::size_t rel, std::vector<Tuple> tuples) const {
  auto rels = rels_;
  rels.at(rel) = std::move(tuples);
  return Structure(sig_, n_, std::move(rels));
}

Structure disjoint_union(const Structure& a, const Structure& b) {
  if (!(a.signature() == b.signature()))
    throw PreconditionError("disjoint union needs equal signatures");
  std::vector<std::vector<Tuple>> rels(a.signature().size());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    rels[r] = a.tuples(r);
    for (Tuple t : b.tuples(r)) {
      for (auto& e : t) e += a.size();
      rels[r].push_back(std::move(t));
    }
  }
  return Structure(a.signature(), a.size() + b.size(), std::move(rels));
}

Structure induced_substructure(const Structure& s, std::span<const Element> elements) {
  std::vector<int> local(s.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<int>(i);
  std::vector<std::vector<Tuple>> rels(s.signature().size());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (const auto& t : s.tuples(r)) {
      Tuple u(t.size());
      bool inside = true;
      for (std::size_t k = 0; k < t.size() && inside; ++k) {
        u[k] = local[t[k]];
        inside = u[k] >= 0;
      }
      if (inside) rels[r].push_back(std::move(u));
    }
  }
  return Structure(s.signature(), static_cast<int>(elements.size()), std::move(rels));
}

Structure relabel(const Structure& s, std::span<const Element> perm) {
  std::vector<std::vector<Tuple>> rels(s.signature().size());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (Tuple t : s.tuples(r)) {
      for (auto& e : t) e = perm[e];
      rels[r].push_back(std::move(t));
    }
  }
  return Structure(s.signature(), s.size(), std::move(rels));
}

std::string tuple_to_string(std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace modloc
