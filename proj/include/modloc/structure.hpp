#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modloc {

using Element = int;
using Tuple = std::vector<Element>;

struct RelationSymbol {
  std::string name;
  int arity = 1;
  bool operator==(const RelationSymbol&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<RelationSymbol> relations);

  // "E/2 P0/1"
  static Signature parse(std::string_view text);

  std::size_t size() const { return relations_.size(); }
  const RelationSymbol& operator[](std::size_t i) const { return relations_[i]; }
  const std::vector<RelationSymbol>& relations() const { return relations_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  std::string to_string() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<RelationSymbol> relations_;
};

// Finite relational structure with universe {0..n-1}. Relation tuple lists are
// kept sorted and duplicate-free; membership is answered from a dense bitmap
// when n^arity is small enough.
class Structure {
 public:
  Structure(Signature signature, int size);
  Structure(Signature signature, int size, std::vector<std::vector<Tuple>> relations);

  const Signature& signature() const { return sig_; }
  int size() const { return n_; }
  const std::vector<Tuple>& tuples(std::size_t rel) const { return rels_[rel]; }
  const std::vector<Tuple>& tuples(std::string_view name) const;
  bool holds(std::size_t rel, std::span<const Element> tuple) const;
  bool holds(std::size_t rel, std::initializer_list<Element> tuple) const {
    return holds(rel, std::span<const Element>(tuple.begin(), tuple.size()));
  }
  std::size_t tuple_count() const;

  Structure with_relation(std::size_t rel, std::vector<Tuple> tuples) const;

  bool operator==(const Structure& other) const {
    return n_ == other.n_ && sig_ == other.sig_ && rels_ == other.rels_;
  }

 private:
  void normalize_and_index();

  Signature sig_;
  int n_;
  std::vector<std::vector<Tuple>> rels_;
  std::vector<std::vector<std::uint8_t>> dense_;
};

Structure disjoint_union(const Structure& a, const Structure& b);

// Induced substructure on `elements` (sorted, distinct). Element elements[i]
// becomes local index i.
Structure induced_substructure(const Structure& s, std::span<const Element> elements);

// Relabel: element a becomes perm[a].
Structure relabel(const Structure& s, std::span<const Element> perm);

std::string to_text(const Structure& s);
Structure parse_structure(std::string_view text);
// Several structures separated by lines containing only "---".
std::vector<Structure> parse_structures(std::string_view text);

std::string tuple_to_string(std::span<const Element> t);

}  // namespace modloc
