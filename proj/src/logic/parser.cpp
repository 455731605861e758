#include "modloc/parser.hpp"

#include <cctype>

#include "modloc/errors.hpp"

namespace modloc::logic {

namespace {

struct Token {
  enum Kind { Open, Close, Word, End } kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  Lexer(std::string_view s, std::size_t base) : s_(s), base_(base) {}

  Token next() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else if (c == ';' || c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
    if (i_ >= s_.size()) return {Token::End, {}, base_ + i_};
    std::size_t start = i_;
    if (s_[i_] == '(') return {Token::Open, s_.substr(i_++, 1), base_ + start};
    if (s_[i_] == ')') return {Token::Close, s_.substr(i_++, 1), base_ + start};
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')')
      ++i_;
    return {Token::Word, s_.substr(start, i_ - start), base_ + start};
  }

  Token peek() {
    std::size_t save = i_;
    Token t = next();
    i_ = save;
    return t;
  }

 private:
  std::string_view s_;
  std::size_t base_;
  std::size_t i_ = 0;
};

bool is_identifier(std::string_view w) {
  if (w.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(w[0]);
  if (!(std::isalpha(c0) || w[0] == '_')) return false;
  for (char c : w)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

int parse_int(const Token& t) {
  if (t.kind != Token::Word || t.text.empty()) throw ParseError("expected integer", t.pos);
  long v = 0;
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected integer", t.pos);
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw ParseError("integer too large", t.pos);
  }
  return static_cast<int>(v);
}

FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

class Parser {
 public:
  Parser(std::string_view text, std::size_t base, const NumericVocabulary& vocab)
      : lex_(text, base), vocab_(vocab) {}

  FormulaPtr parse_all() {
    FormulaPtr f = parse();
    Token t = lex_.next();
    if (t.kind != Token::End) throw ParseError("unexpected text after formula", t.pos);
    return f;
  }

 private:
  std::string variable() {
    Token t = lex_.next();
    if (t.kind != Token::Word || !is_identifier(t.text))
      throw ParseError("expected variable name", t.pos);
    return std::string(t.text);
  }

  void close() {
    Token t = lex_.next();
    if (t.kind != Token::Close) throw ParseError("expected ')'", t.pos);
  }

  FormulaPtr parse() {
    Token open = lex_.next();
    if (open.kind != Token::Open) throw ParseError("expected '('", open.pos);
    Token head = lex_.next();
    if (head.kind != Token::Word) throw ParseError("expected operator or relation name", head.pos);
    const std::string h(head.text);

    if (h == "not") {
      FormulaPtr c = parse();
      close();
      return node({NodeKind::Not, "", {}, "", 0, 0, {c}});
    }
    if (h == "and" || h == "or") {
      std::vector<FormulaPtr> cs;
      while (lex_.peek().kind == Token::Open) cs.push_back(parse());
      close();
      return node({h == "and" ? NodeKind::And : NodeKind::Or, "", {}, "", 0, 0, std::move(cs)});
    }
    if (h == "exists" || h == "forall") {
      std::string x = variable();
      FormulaPtr c = parse();
      close();
      return node({h == "exists" ? NodeKind::Exists : NodeKind::Forall, "", {}, x, 0, 0, {c}});
    }
    if (h == "mod") {
      Token tp = lex_.next();
      int p = parse_int(tp);
      Token ti = lex_.next();
      int i = parse_int(ti);
      if (p < 2) throw ParseError("modulus must be at least 2", tp.pos);
      if (i >= p) throw ParseError("residue must be below the modulus", ti.pos);
      std::string x = variable();
      FormulaPtr c = parse();
      close();
      return node({NodeKind::ModExists, "", {}, x, i, p, {c}});
    }

    std::vector<std::string> args;
    while (lex_.peek().kind == Token::Word) args.push_back(variable());
    close();
    if (h == "=") {
      if (args.size() != 2) throw ParseError("'=' takes exactly two variables", head.pos);
      return node({NodeKind::Equal, "", std::move(args), "", 0, 0, {}});
    }
    if (args.empty()) throw ParseError("atom '" + h + "' needs at least one variable", head.pos);
    NodeKind k = vocab_.find(h) ? NodeKind::NumAtom : NodeKind::Atom;
    return node({k, h, std::move(args), "", 0, 0, {}});
  }

  Lexer lex_;
  const NumericVocabulary& vocab_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_tuple(std::string_view line) {
  line = trim(line);
  if (line.empty() || line[0] != '(') return false;
  line.remove_prefix(1);
  line = trim(line);
  return !line.empty() && std::isdigit(static_cast<unsigned char>(line[0]));
}

void parse_tuples(std::string_view s, std::size_t base, int arity, std::vector<std::vector<int>>& out) {
  std::size_t i = 0;
  auto ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  for (;;) {
    ws();
    if (i >= s.size()) return;
    if (s[i] != '(') throw ParseError("expected '(' in table tuples", base + i);
    ++i;
    std::vector<int> t;
    for (;;) {
      ws();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected number in table tuple", base + i);
      long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000'000) throw ParseError("table entry too large", base + i);
        ++i;
      }
      t.push_back(static_cast<int>(v));
      ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')' in table tuple", base + i);
    }
    if (static_cast<int>(t.size()) != arity)
      throw ParseError("table tuple has wrong arity", base + i);
    out.push_back(std::move(t));
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, const NumericVocabulary& vocab) {
  return Parser(text, 0, vocab).parse_all();
}

void check_symbols(const Formula& f, const Signature& sig, const NumericVocabulary& vocab) {
  if (f.kind == NodeKind::Atom) {
    auto idx = sig.find(f.symbol);
    if (!idx) throw SymbolError("unknown relation symbol " + f.symbol);
    if (static_cast<int>(f.args.size()) != sig[*idx].arity)
      throw SymbolError("arity mismatch for " + f.symbol + ": expected " +
                        std::to_string(sig[*idx].arity) + ", got " + std::to_string(f.args.size()));
  } else if (f.kind == NodeKind::NumAtom) {
    const auto* p = vocab.find(f.symbol);
    if (!p) throw SymbolError("unknown numerical predicate " + f.symbol);
    if (static_cast<int>(f.args.size()) != p->arity)
      throw SymbolError("arity mismatch for " + f.symbol + ": expected " + std::to_string(p->arity) +
                        ", got " + std::to_string(f.args.size()));
  }
  for (const auto& c : f.children) check_symbols(*c, sig, vocab);
}

FormulaPtr parse_formula(std::string_view text, const Signature& sig, const NumericVocabulary& vocab) {
  FormulaPtr f = parse_formula(text, vocab);
  check_symbols(*f, sig, vocab);
  return f;
}

FormulaFile parse_formula_file(std::string_view text) {
  NumericVocabulary vocab = NumericVocabulary::builtin();
  std::size_t pos = 0;
  struct Pending {
    std::string name;
    int arity;
    std::vector<std::vector<int>> tuples;
  };
  std::vector<Pending> tables;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::string_view t = trim(line);
    std::size_t line_start = pos;
    if (t.empty() || t.front() == '#' || t.front() == ';') {
      pos = end + 1;
      continue;
    }
    if (t.substr(0, 6) == "table:") {
      std::size_t off = line_start + static_cast<std::size_t>(t.data() - line.data()) + 6;
      std::string_view rest = trim(t.substr(6));
      std::size_t sp = 0;
      while (sp < rest.size() && !std::isspace(static_cast<unsigned char>(rest[sp])) && rest[sp] != '(')
        ++sp;
      std::string_view decl = rest.substr(0, sp);
      auto slash = decl.rfind('/');
      if (slash == std::string_view::npos || slash == 0)
        throw ParseError("expected NAME/arity after 'table:'", off);
      Token fake{Token::Word, decl.substr(slash + 1), off};
      int arity = parse_int(fake);
      if (arity < 1) throw ParseError("table arity must be positive", off);
      Pending p{std::string(decl.substr(0, slash)), arity, {}};
      std::size_t body_off = off + static_cast<std::size_t>(rest.data() - t.substr(6).data()) + sp;
      parse_tuples(rest.substr(sp), body_off, arity, p.tuples);
      pos = end + 1;
      while (pos < text.size()) {
        std::size_t e2 = text.find('\n', pos);
        if (e2 == std::string_view::npos) e2 = text.size();
        std::string_view l2 = text.substr(pos, e2 - pos);
        if (!starts_tuple(l2)) break;
        parse_tuples(l2, pos, arity, p.tuples);
        pos = e2 + 1;
      }
      tables.push_back(std::move(p));
      continue;
    }
    break;
  }
  for (auto& p : tables) vocab.add_table(p.name, p.arity, std::move(p.tuples));
  std::string_view body = pos < text.size() ? text.substr(pos) : std::string_view{};
  FormulaPtr f = Parser(body, pos < text.size() ? pos : text.size(), vocab).parse_all();
  return {f, std::move(vocab)};
}

}  // namespace modloc::logic
