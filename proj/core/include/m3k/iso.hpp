#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

// Lexicographically minimal basis-indicator string over all ground-set
// permutations; r-subsets enumerated in lex order of their sorted tuples.
// Equal strings iff isomorphic. Memoized.
std::string canonical_form(const Matroid& m);

// Permutation-invariant 64-bit hash. Unequal hashes imply non-isomorphic.
std::uint64_t iso_fingerprint(const Matroid& m);

// Per-element invariant hashes (counts of containing subsets by size/rank).
// Elements with different values cannot map to each other.
std::vector<std::uint64_t> element_profiles(const Matroid& m);

// Backtracking search for a rank-preserving bijection phi with
// phi[element of a] = element of b and r_a(S) == r_b(phi(S)) for all S.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

bool is_isomorphic(const Matroid& a, const Matroid& b);

}  // namespace m3k
