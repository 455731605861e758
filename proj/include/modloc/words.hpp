#pragma once

#include <string>
#include <string_view>

namespace modloc {

struct PrimitiveRoot {
  std::string root;     // shortest z with word = z^multiplicity
  int multiplicity = 0;
};

PrimitiveRoot primitive_root(std::string_view word);

}  // namespace modloc
