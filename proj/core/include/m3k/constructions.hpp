#pragma once

#include <utility>
#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

// Element labels of theta(n) / theta_minus(n): the segment elements w_1..w_k
// and the cosegment elements z_1..z_n, as ground-set indices.
struct ThetaLabels {
  std::vector<int> w;
  std::vector<int> z;
};

Matroid uniform(int r, int n);

// Cycle matroid of the graph with `vertex_count` vertices and the given edge
// list; element i is edge i. Parallel edges and loops are allowed.
Matroid graphic_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Rank-r wheel: spokes first (s_i = i-1 for i = 1..r), then rim edges
// (r_i = r+i-1). whirl(r) relaxes the rim circuit-hyperplane.
Matroid wheel(int r);
Matroid whirl(int r);
Mask wheel_rim(int r);

// Relaxes a circuit-hyperplane: the bases gain exactly H.
Matroid relax(const Matroid& m, Mask h);

// The rank-n matroid on W u Z whose circuits are the 3-subsets of W, the sets
// (Z - z_i) u {w_i}, and the sets (Z - z_i) u {w_j, w_k} for distinct i, j, k.
// Elements: w_i = i-1, z_i = n+i-1.
std::pair<Matroid, ThetaLabels> theta(int n);

// theta(n) with w_n deleted, relabelled to an initial segment:
// w_i = i-1 (i <= n-1), z_i = n+i-2.
std::pair<Matroid, ThetaLabels> theta_minus(int n);

// Rank-3 matroid on 8 points with lines {x1,x2,x3,x4}, {x1,y1,y2,y3},
// {x2,e,y2} and {x3,e,y1}. Elements in order x1,x2,x3,x4,e,y1,y2,y3.
Matroid l8();
std::vector<std::string> l8_names();

Matroid fano();

Matroid mk4();  // cycle matroid of K_4

}  // namespace m3k
