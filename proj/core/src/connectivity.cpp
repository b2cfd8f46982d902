#include "m3k/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace m3k {

int lambda(const Matroid& m, Mask x) {
  return m.rank(x) + m.rank(m.ground() & ~x) - m.rank();
}

int local_connectivity(const Matroid& m, Mask a, Mask b) {
  return m.rank(a) + m.rank(b) - m.rank(a | b);
}

bool is_k_separating(const Matroid& m, Mask x, int k) { return lambda(m, x) <= k - 1; }

bool is_exactly_k_separating(const Matroid& m, Mask x, int k) {
  return lambda(m, x) == k - 1;
}

std::vector<Mask> k_separations(const Matroid& m, int k) {
  if (k < 1) throw std::invalid_argument("k_separations: need k >= 1");
  std::vector<Mask> out;
  const int n = m.size();
  if (n == 0) return out;
  const Mask e = m.ground();
  // fix element 0 in the complement to dedupe {X, E-X}
  for (Mask x = 0; x <= e; ++x) {
    if (has_bit(x, 0)) continue;
    if (count(x) < k || count(e & ~x) < k) continue;
    if (is_k_separating(m, x, k)) out.push_back(x);
    if (x == e) break;
  }
  return out;
}

bool is_n_connected(const Matroid& m, int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("is_n_connected: n must be 2, 3 or 4");
  const int sz = m.size();
  const Mask e = m.ground();
  for (Mask x = 0; x <= e && sz > 0; ++x) {
    if (has_bit(x, 0)) continue;
    const int cx = count(x), cy = sz - cx;
    const int lam = lambda(m, x);
    for (int k = 1; k < n; ++k)
      if (lam <= k - 1 && std::min(cx, cy) >= k) return false;
    if (x == e) break;
  }
  return true;
}

bool is_vertical_sep3(const Matroid& m, const VerticalSep3& s) {
  if (s.e < 0 || s.e >= m.size()) return false;
  const Mask e = m.ground();
  if ((s.x | s.y | bit(s.e)) != e) return false;
  if ((s.x & s.y) || has_bit(s.x, s.e) || has_bit(s.y, s.e)) return false;
  const Matroid* h = &m;
  Matroid d;
  if (s.kind == SepKind::cyclic) {
    d = dual(m);
    h = &d;
  }
  if (count(s.x) < 3 || count(s.y) < 3) return false;
  if (h->rank(s.x) < 3 || h->rank(s.y) < 3) return false;
  if (h->rank(s.x) + h->rank(s.y) - h->rank() > 2) return false;
  // e in cl(X) and cl(Y)
  return h->rank(s.x | bit(s.e)) == h->rank(s.x) && h->rank(s.y | bit(s.e)) == h->rank(s.y);
}

namespace {

std::vector<VerticalSep3> enumerate_vseps(const Matroid& h, SepKind kind) {
  std::vector<VerticalSep3> out;
  const int n = h.size();
  const int r = h.rank();
  for (int e = 0; e < n; ++e) {
    const Mask rest = h.ground() & ~bit(e);
    if (count(rest) < 6) break;  // need |X|, |Y| >= 3
    const int low = lowest(rest);
    for (Mask x = 0; x <= rest; ++x) {
      if ((x & ~rest) || has_bit(x, low)) continue;  // smallest element stays in Y
      const Mask y = rest & ~x;
      if (count(x) < 3 || count(y) < 3) continue;
      const int rx = h.rank(x), ry = h.rank(y);
      if (rx < 3 || ry < 3 || rx + ry - r > 2) continue;
      if (h.rank(x | bit(e)) != rx || h.rank(y | bit(e)) != ry) continue;
      out.push_back({x, e, y, kind});
      if (x == rest) break;
    }
  }
  return out;
}

}  // namespace

std::vector<VerticalSep3> vertical_3_separations(const Matroid& m) {
  if (!is_n_connected(m, 3))
    throw std::invalid_argument("vertical_3_separations: matroid is not 3-connected");
  return enumerate_vseps(m, SepKind::vertical);
}

std::vector<VerticalSep3> cyclic_3_separations(const Matroid& m) {
  if (!is_n_connected(m, 3))
    throw std::invalid_argument("cyclic_3_separations: matroid is not 3-connected");
  return enumerate_vseps(dual(m), SepKind::cyclic);
}

bool is_maximal_vertical(const Matroid& m, const VerticalSep3& s) {
  const Matroid h = s.kind == SepKind::cyclic ? dual(m) : m;
  const Mask target = s.side_with_center();
  for (const VerticalSep3& t : enumerate_vseps(h, s.kind)) {
    for (const Mask side : {t.y | bit(t.e), t.x | bit(t.e)}) {
      if ((target & side) == target && side != target) return false;
    }
  }
  return true;
}

VerticalSep3 close_off(const Matroid& m, const VerticalSep3& s) {
  const Mask cl = s.kind == SepKind::vertical ? closure(m, s.y) : coclosure(m, s.y);
  return {s.x & ~cl, s.e, cl & ~bit(s.e), s.kind};
}

namespace {

// DFS with memo: can `from` be extended one element at a time inside `universe`
// so that every prefix keeps pred(prefix) true, ending at `universe`?
template <typename Pred>
bool extend_search(Mask from, Mask universe, const Pred& pred, std::vector<char>& memo) {
  if (from == universe) return true;
  char& slot = memo[from];
  if (slot) return slot == 1;
  bool ok = false;
  Mask todo = universe & ~from;
  while (todo && !ok) {
    const int e = lowest(todo);
    todo &= todo - 1;
    const Mask next = from | bit(e);
    if (pred(next)) ok = extend_search(next, universe, pred, memo);
  }
  slot = ok ? 1 : 2;
  return ok;
}

template <typename Pred>
bool ordering_exists(const Matroid& m, Mask universe, const Pred& pred) {
  std::vector<char> memo(std::size_t{1} << m.size(), 0);
  if (universe == 0) return true;
  bool ok = false;
  Mask todo = universe;
  while (todo && !ok) {
    const int e = lowest(todo);
    todo &= todo - 1;
    if (pred(bit(e))) ok = extend_search(bit(e), universe, pred, memo);
  }
  return ok;
}

}  // namespace

bool is_sequential_3_separation(const Matroid& m, Mask x) {
  if (!is_exactly_k_separating(m, x, 3)) return false;
  const Mask y = m.ground() & ~x;
  auto pred = [&](Mask p) { return is_k_separating(m, p, 3); };
  return ordering_exists(m, x, pred) || ordering_exists(m, y, pred);
}

bool has_path_width_three(const Matroid& m) {
  auto pred = [&](Mask p) { return is_k_separating(m, p, 3); };
  return ordering_exists(m, m.ground(), pred);
}

bool is_path_of_3_separations(const Matroid& m, const std::vector<Mask>& parts) {
  Mask seen = 0;
  for (Mask p : parts) {
    if (p == 0 || (p & seen)) return false;
    seen |= p;
  }
  if (seen != m.ground()) return false;
  Mask prefix = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    prefix |= parts[i];
    if (!is_exactly_k_separating(m, prefix, 3)) return false;
  }
  return true;
}

}  // namespace m3k
