#include "modloc/locality.hpp"

namespace modloc::locality {

namespace {

LocalityReport base(std::string notion, int r, std::size_t total, std::size_t cap) {
  LocalityReport rep;
  rep.notion = std::move(notion);
  rep.radius = r;
  rep.total = total;
  rep.cap = cap;
  return rep;
}

}  // namespace

std::string LocalityReport::to_text() const {
  std::string out = "notion: " + notion + "\nradius: " + std::to_string(radius) + "\n";
  if (total == 0) {
    out += "verdict: no-violation\n";
  } else {
    out += "verdict: " + std::to_string(total) + (total == 1 ? " violation\n" : " violations\n");
    for (const auto& w : witnesses) out += "  " + w + "\n";
    if (total > witnesses.size())
      out += "  ... " + std::to_string(total - witnesses.size()) + " more\n";
  }
  out += "--- report\nnotion " + notion + "\nradius " + std::to_string(radius) + "\ncount " +
         std::to_string(total) + "\n";
  for (const auto& w : witnesses) out += "witness " + w + "\n";
  out += "--- end\n";
  return out;
}

LocalityReport make_report(std::string notion, int r, const std::vector<PairViolation>& v, std::size_t cap) {
  auto rep = base(std::move(notion), r, v.size(), cap);
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) {
    const auto& [in, out] = v[i].a_member ? std::pair{v[i].a, v[i].b} : std::pair{v[i].b, v[i].a};
    rep.witnesses.push_back(tuple_to_string(v[i].a) + "/" + tuple_to_string(v[i].b) + " in=" +
                            tuple_to_string(in) + " out=" + tuple_to_string(out));
  }
  return rep;
}

LocalityReport make_report(std::string notion, int r, const std::vector<ShiftViolation>& v, std::size_t cap) {
  auto rep = base(std::move(notion), r, v.size(), cap);
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) {
    std::string w;
    for (const auto& b : v[i].blocks) w += tuple_to_string(b);
    rep.witnesses.push_back(w + (v[i].member ? " in, rotation out" : " out, rotation in"));
  }
  return rep;
}

LocalityReport make_report(std::string notion, int r, const std::vector<HanfViolation>& v, std::size_t cap) {
  auto rep = base(std::move(notion), r, v.size(), cap);
  for (std::size_t i = 0; i < v.size() && i < cap; ++i)
    rep.witnesses.push_back("in=#" + std::to_string(v[i].accepted_structure) + tuple_to_string(v[i].accepted) +
                            " out=#" + std::to_string(v[i].rejected_structure) + tuple_to_string(v[i].rejected));
  return rep;
}

}  // namespace modloc::locality
