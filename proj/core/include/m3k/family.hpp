#pragma once

#include <string>
#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

// A named construction together with optional element names for reporting.
struct NamedMatroid {
  Matroid m;
  std::string name;
  std::vector<std::string> element_names;  // empty means plain indices
};

// Family specs: U(r,n), WHEEL(r), WHIRL(r), THETA(n), THETAMINUS(n), MK4,
// F7, L8, K(v) (complete-graph cycle matroid). Case-insensitive.
NamedMatroid parse_family(const std::string& spec);

}  // namespace m3k
