#include <cctype>

#include "modloc/circuit.hpp"
#include "modloc/errors.hpp"

namespace modloc::circuit {

namespace {

std::string kind_token(const Gate& g) {
  switch (g.kind) {
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Mod: return "MOD" + std::to_string(g.param);
    case GateKind::Input: return "IN" + std::to_string(g.param);
    case GateKind::NegInput: return "NIN" + std::to_string(g.param);
    case GateKind::Const0: return "C0";
    case GateKind::Const1: return "C1";
  }
  return "?";
}

bool parse_number(std::string_view s, long& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view line, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t s = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > s) out.push_back({line.substr(s, i - s), base + s});
  }
  return out;
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::string out = "inputs " + std::to_string(c.input_width()) + "\n";
  for (std::size_t id = 0; id < c.gates().size(); ++id) {
    const Gate& g = c.gates()[id];
    out += std::to_string(id) + " " + kind_token(g);
    for (int a : g.args) out += " " + std::to_string(a);
    out += "\n";
  }
  out += "output " + std::to_string(c.output()) + "\n";
  return out;
}

Circuit parse_circuit(std::string_view text) {
  long width = -1;
  long output = -1;
  std::vector<Gate> gates;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto ws = words(text.substr(pos, end - pos), pos);
    std::size_t line_pos = pos;
    pos = end + 1;
    if (ws.empty() || ws[0].first.front() == '#') continue;
    if (output >= 0) throw ParseError("text after the output line", line_pos);
    const auto head = ws[0].first;
    if (head == "inputs") {
      if (width >= 0 || !gates.empty()) throw ParseError("'inputs' must be the first line", line_pos);
      if (ws.size() != 2 || !parse_number(ws[1].first, width))
        throw ParseError("expected 'inputs <m>'", line_pos);
      continue;
    }
    if (head == "output") {
      if (ws.size() != 2 || !parse_number(ws[1].first, output))
        throw ParseError("expected 'output <gid>'", line_pos);
      if (output >= static_cast<long>(gates.size())) throw ParseError("output gate undefined", ws[1].second);
      continue;
    }
    if (width < 0) throw ParseError("missing 'inputs <m>' header", line_pos);
    long gid;
    if (!parse_number(head, gid) || gid != static_cast<long>(gates.size()))
      throw ParseError("gate ids must be consecutive from 0", ws[0].second);
    if (ws.size() < 2) throw ParseError("missing gate kind", line_pos);
    std::string_view kind = ws[1].first;
    Gate g{GateKind::Const0, 0, {}};
    long param = 0;
    if (kind == "AND") g.kind = GateKind::And;
    else if (kind == "OR") g.kind = GateKind::Or;
    else if (kind == "C0") g.kind = GateKind::Const0;
    else if (kind == "C1") g.kind = GateKind::Const1;
    else if (kind.substr(0, 3) == "MOD" && parse_number(kind.substr(3), param)) g = {GateKind::Mod, static_cast<int>(param), {}};
    else if (kind.substr(0, 3) == "NIN" && parse_number(kind.substr(3), param)) g = {GateKind::NegInput, static_cast<int>(param), {}};
    else if (kind.substr(0, 2) == "IN" && parse_number(kind.substr(2), param)) g = {GateKind::Input, static_cast<int>(param), {}};
    else throw ParseError("unknown gate kind '" + std::string(kind) + "'", ws[1].second);
    if (g.kind == GateKind::Mod && g.param < 2) throw ParseError("MOD gate needs p >= 2", ws[1].second);
    if ((g.kind == GateKind::Input || g.kind == GateKind::NegInput) && (g.param < 1 || g.param > width))
      throw ParseError("input index outside 1..inputs", ws[1].second);
    for (std::size_t k = 2; k < ws.size(); ++k) {
      long a;
      if (!parse_number(ws[k].first, a) || a >= gid)
        throw ParseError("argument must be an earlier gate id", ws[k].second);
      g.args.push_back(static_cast<int>(a));
    }
    if (is_leaf(g.kind) && !g.args.empty()) throw ParseError("leaf gate takes no arguments", ws[2].second);
    gates.push_back(std::move(g));
  }
  if (output < 0) throw ParseError("missing 'output <gid>' line", text.size());
  return Circuit(static_cast<int>(width), std::move(gates), static_cast<int>(output));
}

}  // namespace modloc::circuit
