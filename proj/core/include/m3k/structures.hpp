#pragma once

#include <optional>
#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

// A fan ordering f_1..f_k: consecutive triples alternate between triangles
// and triads, starting as recorded by first_is_triangle.
struct FanOrdering {
  std::vector<int> elements;
  bool first_is_triangle = true;

  int length() const { return static_cast<int>(elements.size()); }
  Mask element_set() const {
    Mask m = 0;
    for (int e : elements) m |= bit(e);
    return m;
  }
  bool window_is_triangle(int i) const { return (i % 2 == 0) == first_is_triangle; }
  // Defined for length >= 4.
  bool spoke_end_first() const { return first_is_triangle; }
};

// Witness that M|(W u Z) (orientation primal) or M*|(W u Z) (dual) is
// isomorphic to theta_n (variant full) or theta_n minus a segment element
// (variant minus), with W the segment and Z the cosegment side of that host.
struct ThetaSeparator {
  Mask w = 0;
  Mask z = 0;
  int n = 0;
  enum class Variant { full, minus } variant = Variant::full;
  enum class Orientation { primal, dual } orientation = Orientation::primal;

  Mask set() const { return w | z; }
};

struct Flower {
  std::vector<Mask> petals;
  bool swirl_like = false;
};

// Maximal subsets X with M|X a rank-2 uniform matroid, |X| >= 3.
std::vector<Mask> segments(const Matroid& m);
std::vector<Mask> cosegments(const Matroid& m);

// All maximal fans (element sets not properly contained in another fan),
// one representative ordering per element set.
std::vector<FanOrdering> maximal_fans(const Matroid& m);

// Size of the largest fan whose element set contains `fset`; 0 if `fset`
// is not part of any fan.
int fan_set_extension(const Matroid& m, Mask fset);

// All fan orderings whose element set is exactly `set`, deduplicated up to
// reversal; optionally only those starting at `first`.
std::vector<FanOrdering> fan_orderings(const Matroid& m, Mask set, int first = -1);

// Longest fan containing the given ordering as a contiguous run.
int fan_extension_limit(const Matroid& m, const FanOrdering& f);

bool has_4_element_fan(const Matroid& m);

std::vector<ThetaSeparator> theta_separators(const Matroid& m);

bool is_flower(const Matroid& m, const std::vector<Mask>& petals);
bool is_swirl_like(const Matroid& m, const std::vector<Mask>& petals);

// Searches for a swirl-like flower (A, {f1,f2}, {f3,f4}, B); when the fan has
// five elements, f5 is pinned inside B.
std::optional<Flower> find_swirl_like_around_fan(const Matroid& m, const FanOrdering& f);

}  // namespace m3k
