#include "m3k/structures.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "m3k/connectivity.hpp"
#include "m3k/constructions.hpp"

namespace m3k {

namespace {

void collect_segment_choices(const std::vector<std::vector<int>>& classes, std::size_t i,
                             Mask acc, std::vector<Mask>& out) {
  if (i == classes.size()) {
    out.push_back(acc);
    return;
  }
  for (int e : classes[i]) collect_segment_choices(classes, i + 1, acc | bit(e), out);
}

}  // namespace

std::vector<Mask> segments(const Matroid& m) {
  const int n = m.size();
  const Mask lp = loops(m);
  std::set<Mask> flats;
  for (int i = 0; i < n; ++i) {
    if (has_bit(lp, i)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (has_bit(lp, j)) continue;
      const Mask pair = bit(i) | bit(j);
      if (m.rank(pair) == 2) flats.insert(closure(m, pair));
    }
  }
  std::vector<Mask> out;
  for (Mask f : flats) {
    // group the non-loop elements of the flat into parallel classes
    std::vector<std::vector<int>> classes;
    Mask todo = f & ~lp;
    while (todo) {
      const int e = lowest(todo);
      todo &= todo - 1;
      std::vector<int> cls{e};
      Mask rest = todo;
      while (rest) {
        const int g = lowest(rest);
        rest &= rest - 1;
        if (m.rank(bit(e) | bit(g)) == 1) {
          cls.push_back(g);
          todo &= ~bit(g);
        }
      }
      classes.push_back(std::move(cls));
    }
    if (classes.size() >= 3) collect_segment_choices(classes, 0, 0, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> cosegments(const Matroid& m) { return segments(dual(m)); }

namespace {

struct FanContext {
  const Matroid* m;
  std::unordered_set<Mask> tris, triads;

  bool typed(Mask t, bool triangle) const {
    return triangle ? tris.count(t) > 0 : triads.count(t) > 0;
  }
};

FanContext make_fan_context(const Matroid& m) {
  FanContext ctx;
  ctx.m = &m;
  for (Mask t : triangles(m)) ctx.tris.insert(t);
  for (Mask t : triads(m)) ctx.triads.insert(t);
  return ctx;
}

std::vector<int> normalized(const std::vector<int>& seq) {
  std::vector<int> rev(seq.rbegin(), seq.rend());
  return std::min(seq, rev);
}

// Valid typings of a sequence: can the first window be a triangle / a triad
// with strict alternation throughout?
std::pair<bool, bool> valid_typings(const FanContext& ctx, const std::vector<int>& seq) {
  bool tri_first = true, triad_first = true;
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    const Mask w = bit(seq[i]) | bit(seq[i + 1]) | bit(seq[i + 2]);
    const bool even = i % 2 == 0;
    if (!ctx.typed(w, even)) tri_first = false;
    if (!ctx.typed(w, !even)) triad_first = false;
    if (!tri_first && !triad_first) break;
  }
  return {tri_first, triad_first};
}

// All one-element end extensions of a fan sequence, restricted to `universe`.
std::vector<std::vector<int>> fan_extensions(const FanContext& ctx, const std::vector<int>& seq,
                                             Mask universe) {
  std::vector<std::vector<int>> out;
  auto [tri_first, triad_first] = valid_typings(ctx, seq);
  const int k = static_cast<int>(seq.size());
  Mask used = 0;
  for (int e : seq) used |= bit(e);
  const int parity = k % 2;  // window index of a right extension is k-2
  for (int g = 0; g < ctx.m->size(); ++g) {
    if (has_bit(used, g) || !has_bit(universe, g)) continue;
    const Mask right = bit(seq[k - 2]) | bit(seq[k - 1]) | bit(g);
    // right window index k-2: triangle iff (k-2 even) == first_is_triangle
    const bool right_even = (k - 2) % 2 == 0;
    if ((tri_first && ctx.typed(right, right_even)) ||
        (triad_first && ctx.typed(right, !right_even))) {
      std::vector<int> nxt = seq;
      nxt.push_back(g);
      out.push_back(std::move(nxt));
    }
    const Mask left = bit(g) | bit(seq[0]) | bit(seq[1]);
    // after prepending, old window i becomes i+1; new first window must make
    // the old typing shift parity
    if ((tri_first && ctx.typed(left, false)) || (triad_first && ctx.typed(left, true))) {
      std::vector<int> nxt;
      nxt.reserve(seq.size() + 1);
      nxt.push_back(g);
      nxt.insert(nxt.end(), seq.begin(), seq.end());
      out.push_back(std::move(nxt));
    }
  }
  (void)parity;
  return out;
}

// Enumerates fan sequences inside `universe` by DFS from every typed triple.
// Visits each sequence once (up to reversal); reports the maximal ones.
template <typename Visit>
void enumerate_fan_sequences(const FanContext& ctx, Mask universe, const Visit& visit) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  const int n = ctx.m->size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = a + 1; c < n; ++c) {  // a < c kills one reversal
        if (c == b) continue;
        const Mask t = bit(a) | bit(b) | bit(c);
        if ((t & ~universe) || (!ctx.tris.count(t) && !ctx.triads.count(t))) continue;
        std::vector<int> seed{a, b, c};
        if (seen.insert(normalized(seed)).second) stack.push_back(std::move(seed));
      }
    }
  }
  while (!stack.empty()) {
    std::vector<int> seq = std::move(stack.back());
    stack.pop_back();
    auto ext = fan_extensions(ctx, seq, universe);
    if (ext.empty()) {
      visit(seq);
      continue;
    }
    for (auto& nxt : ext)
      if (seen.insert(normalized(nxt)).second) stack.push_back(std::move(nxt));
  }
}

FanOrdering make_ordering(const FanContext& ctx, std::vector<int> seq) {
  FanOrdering f;
  const Mask first = bit(seq[0]) | bit(seq[1]) | bit(seq[2]);
  auto [tri_first, triad_first] = valid_typings(ctx, seq);
  f.first_is_triangle = tri_first || (ctx.tris.count(first) && !triad_first);
  f.elements = std::move(seq);
  return f;
}

}  // namespace

std::vector<FanOrdering> maximal_fans(const Matroid& m) {
  const FanContext ctx = make_fan_context(m);
  std::map<Mask, std::vector<int>> best;  // element set -> lex-min unextendable ordering
  enumerate_fan_sequences(ctx, m.ground(), [&](const std::vector<int>& seq) {
    const std::vector<int> norm = normalized(seq);
    Mask set = 0;
    for (int e : norm) set |= bit(e);
    auto it = best.find(set);
    if (it == best.end() || norm < it->second) best[set] = norm;
  });
  // maximal means set-maximal: drop fans properly contained in a larger fan
  std::vector<FanOrdering> out;
  for (auto& [set, seq] : best) {
    bool dominated = false;
    for (auto& [other, oseq] : best) {
      (void)oseq;
      if (other != set && (set & ~other) == 0) dominated = true;
    }
    if (!dominated) out.push_back(make_ordering(ctx, seq));
  }
  return out;
}

int fan_set_extension(const Matroid& m, Mask fset) {
  const FanContext ctx = make_fan_context(m);
  int best = 0;
  enumerate_fan_sequences(ctx, m.ground(), [&](const std::vector<int>& seq) {
    Mask set = 0;
    for (int e : seq) set |= bit(e);
    if ((fset & ~set) == 0) best = std::max<int>(best, static_cast<int>(seq.size()));
  });
  return best;
}

std::vector<FanOrdering> fan_orderings(const Matroid& m, Mask set, int first) {
  const FanContext ctx = make_fan_context(m);
  std::set<std::vector<int>> found;
  enumerate_fan_sequences(ctx, set, [&](const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) == count(set)) found.insert(normalized(seq));
  });
  std::vector<FanOrdering> out;
  for (const auto& seq : found) {
    if (first >= 0 && seq.front() != first && seq.back() != first) continue;
    std::vector<int> s = seq;
    if (first >= 0 && s.front() != first) std::reverse(s.begin(), s.end());
    out.push_back(make_ordering(ctx, std::move(s)));
  }
  return out;
}

int fan_extension_limit(const Matroid& m, const FanOrdering& f) {
  const FanContext ctx = make_fan_context(m);
  int best = f.length();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack{f.elements};
  seen.insert(normalized(f.elements));
  while (!stack.empty()) {
    std::vector<int> seq = std::move(stack.back());
    stack.pop_back();
    best = std::max<int>(best, static_cast<int>(seq.size()));
    for (auto& nxt : fan_extensions(ctx, seq, m.ground()))
      if (seen.insert(normalized(nxt)).second) stack.push_back(std::move(nxt));
  }
  return best;
}

bool has_4_element_fan(const Matroid& m) {
  const auto tris = triangles(m);
  const auto tds = triads(m);
  for (Mask t : tris)
    for (Mask s : tds)
      if (count(t & s) == 2 && count(t | s) == 4) return true;
  return false;
}

namespace {

const Matroid& theta_reference(int n, bool minus) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, Matroid> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(n, minus);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Matroid m = minus ? theta_minus(n).first : theta(n).first;
    it = cache.emplace(key, std::move(m)).first;
  }
  return it->second;
}

// Does host|(W u Z) match theta_n (or theta_n minus) with W as the segment
// and Z as the cosegment side? Verified by explicit bijection + rank tables.
bool labeled_theta_match(const Matroid& host, Mask w_mask, Mask z_mask, int n, bool minus) {
  const std::vector<int> ws = elements_of(w_mask);
  const std::vector<int> zs = elements_of(z_mask);
  const int k = static_cast<int>(ws.size());
  // partner z for each w: (Z - z_j) u {w} must be a circuit for exactly one j
  std::vector<int> partner(k, -1);
  std::vector<char> hit(n, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      if (is_circuit(host, (z_mask ^ bit(zs[j])) | bit(ws[i]))) {
        if (partner[i] >= 0) return false;
        partner[i] = j;
      }
    }
    if (partner[i] < 0 || hit[partner[i]]) return false;
    hit[partner[i]] = 1;
  }
  // reference labels: w_i -> i-1, z_j -> offset + position
  const Matroid& ref = theta_reference(n, minus);
  std::vector<int> zpos(n, -1);
  if (!minus) {
    for (int j = 0; j < n; ++j) zpos[j] = j;
  } else {
    int p = 0;
    int miss = -1;
    for (int j = 0; j < n; ++j)
      if (!hit[j]) miss = j;
    for (int j = 0; j < n; ++j)
      if (j != miss) zpos[j] = p++;
    zpos[miss] = n - 1;
  }
  const int zoff = minus ? n - 1 : n;
  std::vector<int> ref_of(host.size(), -1);
  for (int i = 0; i < k; ++i) ref_of[ws[i]] = zpos[partner[i]];
  for (int j = 0; j < n; ++j) ref_of[zs[j]] = zoff + zpos[j];

  const Mask s = w_mask | z_mask;
  Mask t = s;
  while (true) {
    Mask rt = 0;
    Mask u = t;
    while (u) {
      const int e = lowest(u);
      u &= u - 1;
      rt |= bit(ref_of[e]);
    }
    if (host.rank(t) != ref.rank(rt)) return false;
    if (t == 0) break;
    t = (t - 1) & s;
  }
  return true;
}

void detect_in_host(const Matroid& host, ThetaSeparator::Orientation orient,
                    std::vector<ThetaSeparator>& out) {
  const int nelem = host.size();
  const Mask e = host.ground();
  // bucket subsets: rank-2 sets and corank-2 sets by size
  std::vector<std::vector<Mask>> rank2(nelem + 1), corank2(nelem + 1);
  for (Mask x = 1; x <= e && nelem > 0; ++x) {
    const int c = count(x);
    if (host.rank(x) == 2) rank2[c].push_back(x);
    if (host.corank(x) == 2) corank2[c].push_back(x);
    if (x == e) break;
  }
  for (int n = 3; 2 * n - 1 <= nelem; ++n) {
    for (Mask z : corank2[n]) {
      for (int wsize : {n, n - 1}) {
        if (wsize > nelem || 2 * n - (n - wsize) > nelem) continue;
        const bool minus = wsize == n - 1;
        for (Mask w : rank2[wsize]) {
          if (w & z) continue;
          if (labeled_theta_match(host, w, z, n, minus))
            out.push_back({w, z, n,
                           minus ? ThetaSeparator::Variant::minus
                                 : ThetaSeparator::Variant::full,
                           orient});
        }
      }
    }
  }
}

}  // namespace

std::vector<ThetaSeparator> theta_separators(const Matroid& m) {
  std::vector<ThetaSeparator> out;
  if (m.rank() < 4 || m.corank() < 4) return out;
  detect_in_host(m, ThetaSeparator::Orientation::primal, out);
  const Matroid d = dual(m);
  detect_in_host(d, ThetaSeparator::Orientation::dual, out);
  return out;
}

bool is_flower(const Matroid& m, const std::vector<Mask>& petals) {
  const std::size_t n = petals.size();
  if (n < 2) return false;
  Mask seen = 0;
  for (Mask p : petals) {
    if (count(p) < 2 || (p & seen)) return false;
    seen |= p;
  }
  if (seen != m.ground()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_k_separating(m, petals[i], 3)) return false;
    if (!is_k_separating(m, petals[i] | petals[(i + 1) % n], 3)) return false;
  }
  return true;
}

bool is_swirl_like(const Matroid& m, const std::vector<Mask>& petals) {
  const std::size_t n = petals.size();
  if (n < 4 || !is_flower(m, petals)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      const int want = consecutive ? 1 : 0;
      if (local_connectivity(m, petals[i], petals[j]) != want) return false;
    }
  return true;
}

std::optional<Flower> find_swirl_like_around_fan(const Matroid& m, const FanOrdering& f) {
  if (f.length() < 4) return std::nullopt;
  const Mask f12 = bit(f.elements[0]) | bit(f.elements[1]);
  const Mask f34 = bit(f.elements[2]) | bit(f.elements[3]);
  const Mask pinned = f.length() >= 5 ? bit(f.elements[4]) : 0;  // f5 goes into B
  const Mask rest = m.ground() & ~f12 & ~f34;
  const Mask free = rest & ~pinned;
  // enumerate A over submasks of free; B = rest - A
  Mask a = free;
  while (true) {
    const Mask b = rest & ~a;
    if (count(a) >= 2 && count(b) >= 2) {
      std::vector<Mask> petals{a, f12, f34, b};
      if (is_swirl_like(m, petals)) return Flower{petals, true};
    }
    if (a == 0) break;
    a = (a - 1) & free;
  }
  return std::nullopt;
}

}  // namespace m3k
