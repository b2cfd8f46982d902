#include "m3k/mask.hpp"

#include <sstream>

namespace m3k {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = lowest(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

std::string format_mask(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string format_mask(Mask m, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) os << ',';
    if (e < static_cast<int>(names.size()))
      os << names[e];
    else
      os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Mask> k_subsets_lex(int n, int r) {
  std::vector<Mask> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return out;
  if (r == 0) return {Mask{0}};
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= bit(v);
    out.push_back(m);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

static void colex_rec(int top_exclusive, int r, Mask acc, std::vector<Mask>& out) {
  if (r == 0) {
    out.push_back(acc);
    return;
  }
  for (int t = r - 1; t < top_exclusive; ++t) colex_rec(t, r - 1, acc | bit(t), out);
}

std::vector<Mask> k_subsets_colex(int n, int r) {
  std::vector<Mask> out;
  if (r > n) return out;
  colex_rec(n, r, 0, out);
  return out;
}

}  // namespace m3k
