#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "m3k/matroid.hpp"
#include "m3k/structures.hpp"

namespace m3k {

// A realization of a minor: minor(M, contracted, deleted) is isomorphic to
// the target, and `retained` plays the role of the target's ground set.
struct MinorWitness {
  Mask contracted = 0;
  Mask deleted = 0;
  Mask retained = 0;
};

bool has_minor(const Matroid& m, const Matroid& n);
std::vector<MinorWitness> minor_witnesses(const Matroid& m, const Matroid& n);

// Isomorphism classes of all minors of m (m itself included).
struct MinorClassSet {
  struct Entry {
    Matroid rep;
    std::uint64_t fp = 0;
    bool three_connected = false;
  };
  std::vector<Entry> classes;
  std::unordered_map<std::uint64_t, std::vector<int>> by_fp;

  int find(const Matroid& n) const;  // -1 when n is not a minor of m
  bool contains(const Matroid& n) const { return find(n) >= 0; }
};

MinorClassSet minor_classes(const Matroid& m);

// witnesses[j] lists every (C, D) pair realizing class j of `cls`.
std::vector<std::vector<MinorWitness>> witnesses_by_class(const Matroid& m,
                                                          const MinorClassSet& cls);

// Simplification / cosimplification of the single-element removals.
struct SiCoPair {
  Matroid si_contract;  // si(M/e)
  Matroid co_delete;    // co(M\e)
  bool si_3connected = false;
  bool co_3connected = false;
};

SiCoPair sico(const Matroid& m, int e);

struct ElasticityReport {
  Mask elastic = 0;
  Mask n_elastic = 0;
  Mask n_revealing = 0;
  struct Detail {
    bool si_3conn = false, co_3conn = false;
    bool si_has_minor = false, co_has_minor = false;
  };
  std::vector<Detail> detail;  // per element
};

bool is_elastic(const Matroid& m, int e);
Mask elastic_elements(const Matroid& m);

ElasticityReport elasticity_report(const Matroid& m, const Matroid& n);
Mask n_elastic_elements(const Matroid& m, const Matroid& n);
Mask n_revealing_elements(const Matroid& m, const Matroid& n);

// Whether the separator reveals n in m: some cosegment-side element of the
// oriented host is revealing there (with the dual minor for dual orientation).
bool reveals(const Matroid& m, const ThetaSeparator& sep, const Matroid& n);

}  // namespace m3k
