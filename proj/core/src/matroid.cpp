#include "m3k/matroid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace m3k {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_n(int n) {
  require(n >= 0 && n <= kMaxElements,
          "ground-set size must be between 0 and " + std::to_string(kMaxElements));
}

}  // namespace

Matroid::Matroid() : n_(0), table_(1, 0) {}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> table,
                                 std::string provenance) {
  check_n(n);
  require(table.size() == (std::size_t{1} << n), "rank table has wrong size");
  Matroid m;
  m.n_ = n;
  m.table_ = std::move(table);
  m.provenance_ = std::move(provenance);
  return m;
}

Matroid Matroid::with_provenance(std::string p) const {
  Matroid m = *this;
  m.provenance_ = std::move(p);
  return m;
}

std::string Matroid::table_key() const {
  std::string key;
  key.reserve(table_.size() + 1);
  key.push_back(static_cast<char>(n_));
  key.append(reinterpret_cast<const char*>(table_.data()), table_.size());
  return key;
}

bool Matroid::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (table_[0] != 0) return fail("r(empty) != 0");
  const Mask e = ground();
  for (Mask x = 0; x <= e; ++x) {
    for (int a = 0; a < n_; ++a) {
      if (has_bit(x, a)) continue;
      const int rx = table_[x];
      const int rxa = table_[x | bit(a)];
      if (rxa < rx || rxa > rx + 1)
        return fail("unit-increase fails at X=" + format_mask(x) + ", e=" + std::to_string(a));
      for (int b = a + 1; b < n_; ++b) {
        if (has_bit(x, b)) continue;
        // Local submodularity implies the global inequality.
        if (table_[x | bit(a)] + table_[x | bit(b)] < table_[x | bit(a) | bit(b)] + rx)
          return fail("submodularity fails at X=" + format_mask(x) + ", {" +
                      std::to_string(a) + "," + std::to_string(b) + "}");
      }
    }
    if (x == e) break;
  }
  return true;
}

GroundMap GroundMap::identity(int n) {
  GroundMap g;
  g.old_n = g.new_n = n;
  g.kept = full_mask(n);
  g.fwd.fill(-1);
  g.back.fill(-1);
  for (int i = 0; i < n; ++i) g.fwd[i] = g.back[i] = static_cast<std::int8_t>(i);
  return g;
}

Mask GroundMap::map_down(Mask old_set) const {
  Mask out = 0;
  for (int i = 0; i < old_n; ++i)
    if (has_bit(old_set, i) && fwd[i] >= 0) out |= bit(fwd[i]);
  return out;
}

Mask GroundMap::map_up(Mask new_set) const {
  Mask out = 0;
  for (int i = 0; i < new_n; ++i)
    if (has_bit(new_set, i)) out |= bit(back[i]);
  return out;
}

Matroid from_bases(int n, const std::vector<Mask>& bases) {
  check_n(n);
  require(!bases.empty(), "from_bases: empty basis family");
  const Mask e = full_mask(n);
  const int r = count(bases[0]);
  std::unordered_set<Mask> bset;
  for (Mask b : bases) {
    require((b & ~e) == 0, "from_bases: basis " + format_mask(b) + " not within ground set");
    require(count(b) == r, "from_bases: bases of unequal cardinality (" + format_mask(bases[0]) +
                               " vs " + format_mask(b) + ")");
    bset.insert(b);
  }
  // Basis-exchange: for B1, B2 and x in B1-B2 there is y in B2-B1 with
  // B1-x+y a basis.
  for (Mask b1 : bset) {
    for (Mask b2 : bset) {
      Mask d1 = b1 & ~b2;
      while (d1) {
        const int x = lowest(d1);
        d1 &= d1 - 1;
        bool ok = false;
        Mask d2 = b2 & ~b1;
        while (d2 && !ok) {
          const int y = lowest(d2);
          d2 &= d2 - 1;
          ok = bset.count((b1 ^ bit(x)) | bit(y)) > 0;
        }
        if (!ok)
          throw std::invalid_argument("from_bases: exchange axiom fails for pair " +
                                      format_mask(b1) + ", " + format_mask(b2) +
                                      " at element " + std::to_string(x));
      }
    }
  }
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  for (Mask x = 0;; ++x) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, count(x & b));
    tbl[x] = static_cast<std::uint8_t>(best);
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl));
}

Matroid from_circuits(int n, const std::vector<Mask>& circuit_list) {
  check_n(n);
  const Mask e = full_mask(n);
  std::unordered_set<Mask> cset;
  for (Mask c : circuit_list) {
    require(c != 0, "from_circuits: empty set is not a circuit");
    require((c & ~e) == 0, "from_circuits: circuit outside ground set");
    cset.insert(c);
  }
  for (Mask a : cset)
    for (Mask b : cset)
      require(a == b || (a & b) != a,
              "from_circuits: circuit " + format_mask(a) + " contained in " + format_mask(b));

  // dependent[X] <=> X contains a listed circuit.
  std::vector<char> dep(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> rk(std::size_t{1} << n, 0);
  for (Mask x = 1; x <= e && e != 0; ++x) {
    bool d = cset.count(x) > 0;
    Mask y = x;
    while (y && !d) {
      const int i = lowest(y);
      y &= y - 1;
      d = dep[x ^ bit(i)];
    }
    dep[x] = d ? 1 : 0;
    if (!d) {
      rk[x] = static_cast<std::uint8_t>(count(x));
    } else {
      int best = 0;
      Mask z = x;
      while (z) {
        const int i = lowest(z);
        z &= z - 1;
        best = std::max<int>(best, rk[x ^ bit(i)]);
      }
      rk[x] = static_cast<std::uint8_t>(best);
    }
  }
  const int r = rk[e];
  std::vector<Mask> bases;
  for (Mask x = 0;; ++x) {
    if (count(x) == r && !dep[x]) bases.push_back(x);
    if (x == e) break;
  }
  Matroid m = from_bases(n, bases);  // rejects non-matroidal input
  auto derived = circuits(m);
  std::vector<Mask> given(cset.begin(), cset.end());
  std::sort(given.begin(), given.end());
  if (derived != given)
    throw std::invalid_argument(
        "from_circuits: input is not the circuit set of a matroid (derived circuits differ)");
  return m;
}

Matroid from_linear_rep(int p, const std::vector<std::vector<int>>& rows) {
  require(p == 2 || p == 3 || p == 5 || p == 7, "from_linear_rep: p must be one of 2,3,5,7");
  const int r = static_cast<int>(rows.size());
  const int n = r == 0 ? 0 : static_cast<int>(rows[0].size());
  check_n(n);
  require(r <= n, "from_linear_rep: more rows than columns");
  for (const auto& row : rows)
    require(static_cast<int>(row.size()) == n, "from_linear_rep: ragged matrix");

  // columns[j][i] = entry (i, j) mod p
  std::vector<std::array<int, kMaxElements>> cols(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < r; ++i) cols[j][i] = ((rows[i][j] % p) + p) % p;

  const Mask e = full_mask(n);
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  std::vector<std::array<int, kMaxElements>> work;
  work.reserve(n);
  for (Mask x = 0;; ++x) {
    work.clear();
    for (int j : elements_of(x)) work.push_back(cols[j]);
    // Gaussian elimination over GF(p).
    int rank = 0;
    for (int row = 0; row < r && rank < static_cast<int>(work.size()); ++row) {
      int pivot = -1;
      for (int k = rank; k < static_cast<int>(work.size()); ++k)
        if (work[k][row] != 0) {
          pivot = k;
          break;
        }
      if (pivot < 0) continue;
      std::swap(work[rank], work[pivot]);
      // normalise pivot to 1
      int inv = 1;
      for (int t = 1; t < p; ++t)
        if (work[rank][row] * t % p == 1) inv = t;
      for (int i = row; i < r; ++i) work[rank][i] = work[rank][i] * inv % p;
      for (int k = 0; k < static_cast<int>(work.size()); ++k) {
        if (k == rank || work[k][row] == 0) continue;
        const int f = work[k][row];
        for (int i = row; i < r; ++i)
          work[k][i] = ((work[k][i] - f * work[rank][i]) % p + p) % p;
      }
      ++rank;
    }
    tbl[x] = static_cast<std::uint8_t>(rank);
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl));
}

Matroid dual(const Matroid& m) {
  const int n = m.size();
  const Mask e = m.ground();
  const int r = m.rank();
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  for (Mask x = 0;; ++x) {
    tbl[x] = static_cast<std::uint8_t>(count(x) + m.rank(e & ~x) - r);
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl), m.provenance().empty() ? std::string{} : m.provenance() + "*");
}

std::pair<Matroid, GroundMap> minor(const Matroid& m, Mask contract, Mask del) {
  require((contract & del) == 0, "minor: contraction and deletion sets intersect");
  const Mask e = m.ground();
  require((contract & ~e) == 0 && (del & ~e) == 0, "minor: sets outside ground set");
  GroundMap g;
  g.old_n = m.size();
  g.kept = e & ~contract & ~del;
  g.new_n = count(g.kept);
  g.fwd.fill(-1);
  g.back.fill(-1);
  int next = 0;
  for (int i = 0; i < m.size(); ++i)
    if (has_bit(g.kept, i)) {
      g.fwd[i] = static_cast<std::int8_t>(next);
      g.back[next] = static_cast<std::int8_t>(i);
      ++next;
    }
  const int rc = m.rank(contract);
  std::vector<std::uint8_t> tbl(std::size_t{1} << g.new_n, 0);
  const Mask ne = full_mask(g.new_n);
  for (Mask x = 0;; ++x) {
    tbl[x] = static_cast<std::uint8_t>(m.rank(g.map_up(x) | contract) - rc);
    if (x == ne) break;
  }
  return {Matroid::from_rank_table(g.new_n, std::move(tbl)), g};
}

std::pair<Matroid, GroundMap> simplify(const Matroid& m) {
  const int n = m.size();
  Mask remove = loops(m);
  Mask seen = 0;
  for (int i = 0; i < n; ++i) {
    if (has_bit(remove, i) || has_bit(seen, i) || m.rank(bit(i)) == 0) continue;
    seen |= bit(i);
    for (int j = i + 1; j < n; ++j) {
      if (has_bit(remove, j) || m.rank(bit(j)) == 0) continue;
      if (m.rank(bit(i) | bit(j)) == 1) remove |= bit(j);  // keep smallest index
    }
  }
  return minor(m, 0, remove);
}

std::pair<Matroid, GroundMap> cosimplify(const Matroid& m) {
  const int n = m.size();
  const Mask cl = coloops(m);
  Mask contract = 0;
  Mask seen = 0;
  for (int i = 0; i < n; ++i) {
    if (has_bit(cl, i) || has_bit(seen, i) || has_bit(contract, i)) continue;
    seen |= bit(i);
    for (int j = i + 1; j < n; ++j) {
      if (has_bit(cl, j)) continue;
      if (m.corank(bit(i) | bit(j)) == 1) contract |= bit(j);  // series pair
    }
  }
  return minor(m, contract, cl);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  check_n(n);
  const Mask ea = a.ground();
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  const Mask e = full_mask(n);
  for (Mask x = 0;; ++x) {
    tbl[x] = static_cast<std::uint8_t>(a.rank(x & ea) + b.rank(x >> a.size()));
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl));
}

Mask closure(const Matroid& m, Mask x) {
  Mask out = x;
  const int rx = m.rank(x);
  for (int i = 0; i < m.size(); ++i)
    if (!has_bit(x, i) && m.rank(x | bit(i)) == rx) out |= bit(i);
  return out;
}

Mask coclosure(const Matroid& m, Mask x) {
  Mask out = x;
  const int rx = m.corank(x);
  for (int i = 0; i < m.size(); ++i)
    if (!has_bit(x, i) && m.corank(x | bit(i)) == rx) out |= bit(i);
  return out;
}

bool is_circuit(const Matroid& m, Mask x) {
  if (x == 0) return false;
  const int k = count(x);
  if (m.rank(x) != k - 1) return false;
  Mask y = x;
  while (y) {
    const int i = lowest(y);
    y &= y - 1;
    if (m.rank(x ^ bit(i)) != k - 1) return false;
  }
  return true;
}

bool is_cocircuit(const Matroid& m, Mask x) {
  if (x == 0) return false;
  const int k = count(x);
  if (m.corank(x) != k - 1) return false;
  Mask y = x;
  while (y) {
    const int i = lowest(y);
    y &= y - 1;
    if (m.corank(x ^ bit(i)) != k - 1) return false;
  }
  return true;
}

std::vector<Mask> bases_of(const Matroid& m) {
  std::vector<Mask> out;
  const int r = m.rank();
  const Mask e = m.ground();
  for (Mask x = 0;; ++x) {
    if (count(x) == r && m.rank(x) == r) out.push_back(x);
    if (x == e) break;
  }
  return out;
}

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  const Mask e = m.ground();
  for (Mask x = 1; x <= e && e != 0; ++x)
    if (is_circuit(m, x)) out.push_back(x);
  return out;
}

std::vector<Mask> cocircuits(const Matroid& m) {
  std::vector<Mask> out;
  const Mask e = m.ground();
  for (Mask x = 1; x <= e && e != 0; ++x)
    if (is_cocircuit(m, x)) out.push_back(x);
  return out;
}

std::vector<Mask> triangles(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask c : circuits(m))
    if (count(c) == 3) out.push_back(c);
  return out;
}

std::vector<Mask> triads(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask c : cocircuits(m))
    if (count(c) == 3) out.push_back(c);
  return out;
}

Mask loops(const Matroid& m) {
  Mask out = 0;
  for (int i = 0; i < m.size(); ++i)
    if (m.rank(bit(i)) == 0) out |= bit(i);
  return out;
}

Mask coloops(const Matroid& m) {
  Mask out = 0;
  for (int i = 0; i < m.size(); ++i)
    if (m.corank(bit(i)) == 0) out |= bit(i);
  return out;
}

bool is_simple(const Matroid& m) {
  if (loops(m)) return false;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.rank(bit(i) | bit(j)) == 1) return false;
  return true;
}

bool is_cosimple(const Matroid& m) {
  if (coloops(m)) return false;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.corank(bit(i) | bit(j)) == 1) return false;
  return true;
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  const int n = m.size();
  require(static_cast<int>(perm.size()) == n, "relabel: permutation has wrong length");
  const Mask e = m.ground();
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  for (Mask x = 0;; ++x) {
    Mask old = 0;
    for (int i = 0; i < n; ++i)
      if (has_bit(x, i)) old |= bit(perm[i]);
    tbl[x] = static_cast<std::uint8_t>(m.rank(old));
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl), m.provenance());
}

}  // namespace m3k
