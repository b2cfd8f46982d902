#pragma once

#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

enum class SepKind { vertical, cyclic };

// A partition (X, {e}, Y) of the ground set. For kind vertical, both induced
// partitions are vertical 3-separations and e lies in cl(X) and cl(Y); for
// kind cyclic the same triple is a vertical 3-separation of the dual.
struct VerticalSep3 {
  Mask x = 0;
  int e = -1;
  Mask y = 0;
  SepKind kind = SepKind::vertical;

  VerticalSep3 flipped() const { return {y, e, x, kind}; }
  Mask side_with_center() const { return y | bit(e); }
};

int lambda(const Matroid& m, Mask x);
int local_connectivity(const Matroid& m, Mask a, Mask b);

bool is_k_separating(const Matroid& m, Mask x, int k);
bool is_exactly_k_separating(const Matroid& m, Mask x, int k);

// One representative per unordered pair {X, E-X}, ascending mask order.
std::vector<Mask> k_separations(const Matroid& m, int k);

bool is_n_connected(const Matroid& m, int n);

bool is_vertical_sep3(const Matroid& m, const VerticalSep3& s);

// All vertical (resp. cyclic) 3-separations, one per unordered {X, Y} pair:
// the listed X never contains the smallest element of E - {e}. Rejects
// matroids that are not 3-connected.
std::vector<VerticalSep3> vertical_3_separations(const Matroid& m);
std::vector<VerticalSep3> cyclic_3_separations(const Matroid& m);

// True iff no separation of the same kind strictly dominates Y u {e}.
bool is_maximal_vertical(const Matroid& m, const VerticalSep3& s);

// (X - cl(Y), {e}, cl(Y) - {e}); coclosure for the cyclic kind.
VerticalSep3 close_off(const Matroid& m, const VerticalSep3& s);

// Orderings whose prefixes stay 3-separating.
bool is_sequential_3_separation(const Matroid& m, Mask x);
bool has_path_width_three(const Matroid& m);
bool is_path_of_3_separations(const Matroid& m, const std::vector<Mask>& parts);

}  // namespace m3k
