#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace m3k {

// A subset of the ground set {0,...,n-1}, one bit per element.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 20;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
constexpr int count(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr Mask full_mask(int n) { return n == 0 ? 0u : (~Mask{0} >> (32 - n)); }

std::vector<int> elements_of(Mask m);

// "{0,2,5}"
std::string format_mask(Mask m);
std::string format_mask(Mask m, const std::vector<std::string>& names);

// All r-subsets of {0..n-1} in lexicographic order of their sorted tuples:
// (0,1,..,r-1), (0,..,r-2,r), ...
std::vector<Mask> k_subsets_lex(int n, int r);

// The same subsets in colexicographic order (the "revlex" convention used by
// published small-matroid databases: A precedes B iff max(A xor B) lies in B).
std::vector<Mask> k_subsets_colex(int n, int r);

}  // namespace m3k
