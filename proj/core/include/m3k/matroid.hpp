#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "m3k/mask.hpp"

namespace m3k {

// An exact matroid on a small ground set, represented by its full rank table.
// Immutable after construction; all operations below are pure.
class Matroid {
 public:
  Matroid();  // U_{0,0}

  static Matroid from_rank_table(int n, std::vector<std::uint8_t> table,
                                 std::string provenance = {});

  int size() const { return n_; }
  Mask ground() const { return full_mask(n_); }
  int rank() const { return table_[table_.size() - 1]; }
  int rank(Mask x) const { return table_[x]; }
  int corank() const { return n_ - rank(); }
  int corank(Mask x) const { return count(x) + table_[ground() & ~x] - rank(); }

  const std::vector<std::uint8_t>& table() const { return table_; }
  const std::string& provenance() const { return provenance_; }
  Matroid with_provenance(std::string p) const;

  // Exact byte key identifying the labelled matroid; used for memo caches.
  std::string table_key() const;

  // Checks normalisation, unit increase and (local) submodularity.
  bool validate(std::string* why = nullptr) const;

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
  std::string provenance_;
};

// Tracks element identity through minors and si/co, so facts about the host
// can be transported to the derived matroid and back.
struct GroundMap {
  int old_n = 0;
  int new_n = 0;
  Mask kept = 0;  // surviving elements, in old coordinates
  std::array<std::int8_t, kMaxElements> fwd{};   // old -> new, -1 if removed
  std::array<std::int8_t, kMaxElements> back{};  // new -> old

  static GroundMap identity(int n);
  bool is_identity() const { return old_n == new_n && kept == full_mask(old_n); }
  int map_elem(int old_e) const { return fwd[old_e]; }
  int unmap_elem(int new_e) const { return back[new_e]; }
  Mask map_down(Mask old_set) const;  // drops removed elements
  Mask map_up(Mask new_set) const;
};

// Constructors. All reject bad input with std::invalid_argument.
Matroid from_bases(int n, const std::vector<Mask>& bases);
Matroid from_circuits(int n, const std::vector<Mask>& circuits);
Matroid from_linear_rep(int p, const std::vector<std::vector<int>>& rows);

Matroid dual(const Matroid& m);
std::pair<Matroid, GroundMap> minor(const Matroid& m, Mask contract, Mask del);
std::pair<Matroid, GroundMap> simplify(const Matroid& m);
std::pair<Matroid, GroundMap> cosimplify(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);

Mask closure(const Matroid& m, Mask x);
Mask coclosure(const Matroid& m, Mask x);
bool is_circuit(const Matroid& m, Mask x);
bool is_cocircuit(const Matroid& m, Mask x);

std::vector<Mask> bases_of(const Matroid& m);
std::vector<Mask> circuits(const Matroid& m);
std::vector<Mask> cocircuits(const Matroid& m);
std::vector<Mask> triangles(const Matroid& m);
std::vector<Mask> triads(const Matroid& m);

Mask loops(const Matroid& m);
Mask coloops(const Matroid& m);
bool is_simple(const Matroid& m);
bool is_cosimple(const Matroid& m);

// Relabels by `perm`, where perm[new_index] = old_index.
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

}  // namespace m3k
