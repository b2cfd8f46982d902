#include "m3k/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace m3k {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Matroid uniform(int r, int n) {
  require(0 <= r && r <= n && n <= kMaxElements, "uniform: need 0 <= r <= n <= 20");
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  const Mask e = full_mask(n);
  for (Mask x = 0;; ++x) {
    tbl[x] = static_cast<std::uint8_t>(std::min(count(x), r));
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl),
                                  "U(" + std::to_string(r) + "," + std::to_string(n) + ")");
}

Matroid graphic_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  require(m <= kMaxElements, "graphic_from_edges: at most 20 edges");
  require(vertex_count >= 0, "graphic_from_edges: negative vertex count");
  for (auto [u, v] : edges)
    require(u >= 0 && v >= 0 && u < vertex_count && v < vertex_count,
            "graphic_from_edges: edge endpoint out of range");
  std::vector<std::uint8_t> tbl(std::size_t{1} << m, 0);
  const Mask e = full_mask(m);
  std::vector<int> parent(vertex_count);
  for (Mask x = 0;; ++x) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    int components = vertex_count;
    for (int i = 0; i < m; ++i) {
      if (!has_bit(x, i)) continue;
      const int a = find(edges[i].first), b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    tbl[x] = static_cast<std::uint8_t>(vertex_count - components);
    if (x == e) break;
  }
  return Matroid::from_rank_table(m, std::move(tbl));
}

Mask wheel_rim(int r) { return full_mask(2 * r) & ~full_mask(r); }

Matroid wheel(int r) {
  require(r >= 2, "wheel: need r >= 2");
  require(2 * r <= kMaxElements, "wheel: too many elements");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) edges.emplace_back(0, i);                    // spokes
  for (int i = 1; i <= r; ++i) edges.emplace_back(i, i % r + 1);            // rim
  return graphic_from_edges(r + 1, edges).with_provenance("W" + std::to_string(r));
}

Matroid relax(const Matroid& m, Mask h) {
  const int k = count(h);
  require(is_circuit(m, h) && m.rank(h) == m.rank() - 1 && closure(m, h) == h,
          "relax: " + format_mask(h) + " is not a circuit-hyperplane");
  require(k == m.rank(), "relax: circuit-hyperplane of unexpected size");
  std::vector<std::uint8_t> tbl(m.table().begin(), m.table().end());
  const Mask e = m.ground();
  for (Mask x = 0;; ++x) {
    tbl[x] = static_cast<std::uint8_t>(std::max<int>(tbl[x], count(x & h)));
    if (x == e) break;
  }
  return Matroid::from_rank_table(m.size(), std::move(tbl));
}

Matroid whirl(int r) {
  require(r >= 2, "whirl: need r >= 2");
  return relax(wheel(r), wheel_rim(r)).with_provenance("whirl" + std::to_string(r));
}

std::pair<Matroid, ThetaLabels> theta(int n) {
  require(n >= 2, "theta: need n >= 2");
  require(2 * n <= kMaxElements, "theta: too many elements");
  ThetaLabels lab;
  for (int i = 0; i < n; ++i) lab.w.push_back(i);
  for (int i = 0; i < n; ++i) lab.z.push_back(n + i);
  const Mask zall = full_mask(2 * n) & ~full_mask(n);
  std::vector<Mask> circ;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) circ.push_back(bit(i) | bit(j) | bit(k));
  for (int i = 0; i < n; ++i) circ.push_back((zall ^ bit(n + i)) | bit(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (j == i || k == i) continue;
        circ.push_back((zall ^ bit(n + i)) | bit(j) | bit(k));
      }
  Matroid m = from_circuits(2 * n, circ).with_provenance("theta" + std::to_string(n));
  return {std::move(m), std::move(lab)};
}

std::pair<Matroid, ThetaLabels> theta_minus(int n) {
  require(n >= 2, "theta_minus: need n >= 2");
  auto [full, lab] = theta(n);
  auto [m, gm] = minor(full, 0, bit(lab.w[n - 1]));
  ThetaLabels out;
  for (int i = 0; i + 1 < n; ++i) out.w.push_back(gm.map_elem(lab.w[i]));
  for (int i = 0; i < n; ++i) out.z.push_back(gm.map_elem(lab.z[i]));
  return {m.with_provenance("theta" + std::to_string(n) + "-"), std::move(out)};
}

Matroid l8() {
  // x1,x2,x3,x4,e,y1,y2,y3 = 0..7
  const std::vector<Mask> lines = {
      bit(0) | bit(1) | bit(2) | bit(3),  // {x1,x2,x3,x4}
      bit(0) | bit(5) | bit(6) | bit(7),  // {x1,y1,y2,y3}
      bit(1) | bit(4) | bit(6),           // {x2,e,y2}
      bit(2) | bit(4) | bit(5),           // {x3,e,y1}
  };
  auto collinear = [&](Mask t) {
    for (Mask l : lines)
      if ((t & l) == t) return true;
    return false;
  };
  std::vector<Mask> circ;
  for (Mask t : k_subsets_lex(8, 3))
    if (collinear(t)) circ.push_back(t);
  for (Mask q : k_subsets_lex(8, 4)) {
    bool has_line_triple = false;
    for (Mask t : k_subsets_lex(8, 3)) {
      if ((t & q) == t && collinear(t)) {
        has_line_triple = true;
        break;
      }
    }
    if (!has_line_triple) circ.push_back(q);
  }
  return from_circuits(8, circ).with_provenance("L8");
}

std::vector<std::string> l8_names() {
  return {"x1", "x2", "x3", "x4", "e", "y1", "y2", "y3"};
}

Matroid fano() {
  std::vector<std::vector<int>> rows(3, std::vector<int>(7));
  for (int c = 1; c <= 7; ++c) {
    rows[0][c - 1] = (c >> 2) & 1;
    rows[1][c - 1] = (c >> 1) & 1;
    rows[2][c - 1] = c & 1;
  }
  return from_linear_rep(2, rows).with_provenance("F7");
}

Matroid mk4() { return wheel(3).with_provenance("MK4"); }

}  // namespace m3k
