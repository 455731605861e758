#include <cctype>
#include <optional>
#include <set>

#include "modloc/errors.hpp"
#include "modloc/structure.hpp"

namespace modloc {

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, start});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Tuples like "(0,1) (1,2)"; offset is for error positions.
std::vector<Tuple> parse_tuple_list(std::string_view s, std::size_t offset) {
  std::vector<Tuple> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '(') throw ParseError("expected '(' in tuple list", offset + i);
    ++i;
    Tuple t;
    for (;;) {
      skip_ws();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected element index", offset + i);
      long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000'000) throw ParseError("element index too large", offset + i);
        ++i;
      }
      t.push_back(static_cast<Element>(v));
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')' in tuple", offset + i);
    }
    out.push_back(std::move(t));
  }
  return out;
}

Structure parse_one(const std::vector<Line>& lines, std::size_t begin, std::size_t end) {
  std::optional<Signature> sig;
  std::optional<int> universe;
  std::vector<std::pair<std::string, std::pair<std::vector<Tuple>, std::size_t>>> rel_lines;
  for (std::size_t li = begin; li < end; ++li) {
    std::string_view raw = lines[li].text;
    std::string_view line = trim(raw);
    const std::size_t off = lines[li].offset + static_cast<std::size_t>(line.data() - raw.data());
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value' line", off);
    std::string key(trim(line.substr(0, colon)));
    std::string_view value = line.substr(colon + 1);
    const std::size_t voff = off + colon + 1;
    if (key == "signature") {
      if (sig) throw ParseError("duplicate signature line", off);
      sig = Signature::parse(value);
    } else if (key == "universe") {
      if (universe) throw ParseError("duplicate universe line", off);
      std::string_view v = trim(value);
      if (v.empty()) throw ParseError("missing universe size", voff);
      long n = 0;
      for (char c : v) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("universe size must be a positive integer", voff);
        n = n * 10 + (c - '0');
        if (n > 100'000'000) throw ParseError("universe too large", voff);
      }
      if (n < 1) throw ParseError("universe must be non-empty", voff);
      universe = static_cast<int>(n);
    } else {
      rel_lines.push_back({key, {parse_tuple_list(value, voff), off}});
    }
  }
  if (!sig) throw ParseError("missing signature line", begin < lines.size() ? lines[begin].offset : 0);
  if (!universe)
    throw ParseError("missing universe line", begin < lines.size() ? lines[begin].offset : 0);
  std::vector<std::vector<Tuple>> rels(sig->size());
  std::set<std::string> seen;
  for (auto& [name, body] : rel_lines) {
    auto idx = sig->find(name);
    if (!idx) throw ParseError("unknown relation symbol '" + name + "'", body.second);
    if (!seen.insert(name).second) throw ParseError("relation '" + name + "' listed twice", body.second);
    for (const auto& t : body.first) {
      if (static_cast<int>(t.size()) != (*sig)[*idx].arity)
        throw ParseError("tuple of wrong arity for relation '" + name + "'", body.second);
      for (Element e : t)
        if (e >= *universe)
          throw ParseError("element " + std::to_string(e) + " outside universe", body.second);
    }
    rels[*idx] = std::move(body.first);
  }
  return Structure(*sig, *universe, std::move(rels));
}

}  // namespace

std::string to_text(const Structure& s) {
  std::string out = "signature: " + s.signature().to_string() + "\n";
  out += "universe: " + std::to_string(s.size()) + "\n";
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    out += s.signature()[r].name + ":";
    for (const auto& t : s.tuples(r)) out += " " + tuple_to_string(t);
    out += "\n";
  }
  return out;
}

Structure parse_structure(std::string_view text) {
  auto all = parse_structures(text);
  if (all.size() != 1)
    throw ParseError("expected exactly one structure, found " + std::to_string(all.size()), 0);
  return std::move(all.front());
}

std::vector<Structure> parse_structures(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Structure> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= lines.size(); ++i) {
    if (i == lines.size() || trim(lines[i].text) == "---") {
      bool has_content = false;
      for (std::size_t j = begin; j < i; ++j) {
        auto t = trim(lines[j].text);
        if (!t.empty() && t.front() != '#') has_content = true;
      }
      if (has_content) out.push_back(parse_one(lines, begin, i));
      begin = i + 1;
    }
  }
  return out;
}

}  // namespace modloc
