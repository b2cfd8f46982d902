#include "m3k/iso.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace m3k {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xFF;
    h *= kFnvPrime;
  }
}

struct Invariants {
  std::uint64_t fingerprint = kFnvOffset;
  std::vector<std::uint64_t> profiles;  // per element
};

Invariants compute_invariants(const Matroid& m) {
  const int n = m.size();
  const int r = m.rank();
  const Mask e = m.ground();
  // counts[e][k * (r+1) + j]: subsets of size k and rank j containing e
  const int stride = (n + 1) * (r + 1);
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(std::max(1, n)) * stride, 0);
  std::vector<std::uint32_t> global(stride, 0);
  for (Mask x = 0;; ++x) {
    const int k = count(x);
    const int j = m.rank(x);
    ++global[k * (r + 1) + j];
    Mask y = x;
    while (y) {
      const int i = lowest(y);
      y &= y - 1;
      ++counts[static_cast<std::size_t>(i) * stride + k * (r + 1) + j];
    }
    if (x == e) break;
  }
  Invariants inv;
  fnv(inv.fingerprint, static_cast<std::uint64_t>(n));
  fnv(inv.fingerprint, static_cast<std::uint64_t>(r));
  for (std::uint32_t g : global) fnv(inv.fingerprint, g);
  inv.profiles.resize(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t h = kFnvOffset;
    for (int s = 0; s < stride; ++s)
      fnv(h, counts[static_cast<std::size_t>(i) * stride + s]);
    inv.profiles[i] = h;
  }
  std::vector<std::uint64_t> sorted = inv.profiles;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t h : sorted) fnv(inv.fingerprint, h);
  return inv;
}

struct CanonState {
  const Matroid* m;
  int n, r;
  std::vector<Mask> subsets;  // new-coordinate r-subsets, lex order
  std::vector<int> perm;      // position -> old element
  Mask used = 0;              // old elements already placed
  std::vector<char> best;     // current minimum indicator; empty until first leaf
  // swap_auto[u][v]: transposing u and v is an automorphism; branches through
  // swap-equivalent unplaced elements coincide, so one suffices
  std::vector<std::vector<char>> swap_auto;
};

// Candidate indicator at a completed permutation; returns true if it became
// the new minimum.
bool try_leaf(CanonState& st) {
  const auto& subs = st.subsets;
  const bool have_best = !st.best.empty();
  std::vector<char> cand(subs.size());
  bool strictly_better = !have_best;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    Mask old = 0;
    Mask s = subs[i];
    while (s) {
      const int pos = lowest(s);
      s &= s - 1;
      old |= bit(st.perm[pos]);
    }
    cand[i] = st.m->rank(old) == st.r ? '1' : '0';
    if (have_best && !strictly_better) {
      if (cand[i] > st.best[i]) return false;  // worse, abandon
      if (cand[i] < st.best[i]) strictly_better = true;
    }
  }
  if (strictly_better) {
    st.best = std::move(cand);
    return true;
  }
  return false;
}

std::vector<std::vector<char>> swap_automorphisms(const Matroid& m) {
  const int n = m.size();
  std::vector<std::vector<char>> out(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Mask rest = m.ground() & ~bit(u) & ~bit(v);
      bool ok = true;
      Mask s = rest;
      while (ok) {
        if (m.rank(s | bit(u)) != m.rank(s | bit(v))) ok = false;
        if (s == 0) break;
        s = (s - 1) & rest;
      }
      out[u][v] = out[v][u] = ok ? 1 : 0;
    }
  }
  return out;
}

void canon_rec(CanonState& st, int depth) {
  if (depth == st.n) {
    try_leaf(st);
    return;
  }
  std::vector<int> tried;
  for (int u = 0; u < st.n; ++u) {
    if (has_bit(st.used, u)) continue;
    bool dup = false;
    for (int v : tried)
      if (st.swap_auto[u][v]) {
        dup = true;
        break;
      }
    if (dup) continue;
    tried.push_back(u);
    st.perm[depth] = u;
    st.used |= bit(u);
    canon_rec(st, depth + 1);
    st.used &= ~bit(u);
  }
}

std::mutex g_canon_mutex;
std::unordered_map<std::string, std::string> g_canon_memo;

}  // namespace

std::string canonical_form(const Matroid& m) {
  const std::string key = m.table_key();
  {
    std::lock_guard<std::mutex> lk(g_canon_mutex);
    auto it = g_canon_memo.find(key);
    if (it != g_canon_memo.end()) return it->second;
  }
  CanonState st;
  st.m = &m;
  st.n = m.size();
  st.r = m.rank();
  st.subsets = k_subsets_lex(st.n, st.r);
  st.perm.assign(st.n, -1);
  st.swap_auto = swap_automorphisms(m);
  canon_rec(st, 0);
  std::string out(st.best.begin(), st.best.end());
  {
    std::lock_guard<std::mutex> lk(g_canon_mutex);
    g_canon_memo.emplace(key, out);
  }
  return out;
}

std::uint64_t iso_fingerprint(const Matroid& m) { return compute_invariants(m).fingerprint; }

std::vector<std::uint64_t> element_profiles(const Matroid& m) {
  return compute_invariants(m).profiles;
}

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  const int n = a.size();
  if (n != b.size() || a.rank() != b.rank()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  const Invariants ia = compute_invariants(a);
  const Invariants ib = compute_invariants(b);
  if (ia.fingerprint != ib.fingerprint) return std::nullopt;

  // Most-constrained-first: order a's elements by ascending profile-class size.
  std::unordered_map<std::uint64_t, int> class_size;
  for (auto h : ia.profiles) ++class_size[h];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const int cx = class_size[ia.profiles[x]], cy = class_size[ia.profiles[y]];
    if (cx != cy) return cx < cy;
    if (ia.profiles[x] != ia.profiles[y]) return ia.profiles[x] < ia.profiles[y];
    return x < y;
  });

  std::vector<int> phi(n, -1);
  Mask used_b = 0;
  // Paired subsets built so far; ranks agree on every prefix pair.
  std::vector<std::pair<Mask, Mask>> pairs{{0u, 0u}};

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int ea = order[depth];
    for (int eb = 0; eb < n; ++eb) {
      if (has_bit(used_b, eb) || ib.profiles[eb] != ia.profiles[ea]) continue;
      const std::size_t base = pairs.size();
      bool ok = true;
      for (std::size_t i = 0; i < base && ok; ++i) {
        const Mask sa = pairs[i].first | bit(ea);
        const Mask sb = pairs[i].second | bit(eb);
        ok = a.rank(sa) == b.rank(sb);
        if (ok) pairs.emplace_back(sa, sb);
      }
      if (ok) {
        phi[ea] = eb;
        used_b |= bit(eb);
        if (self(self, depth + 1)) return true;
        used_b &= ~bit(eb);
        phi[ea] = -1;
      }
      pairs.resize(base);
    }
    return false;
  };
  if (rec(rec, 0)) return phi;
  return std::nullopt;
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.table() == b.table()) return true;
  return find_isomorphism(a, b).has_value();
}

}  // namespace m3k
