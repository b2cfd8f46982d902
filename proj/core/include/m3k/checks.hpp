#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "m3k/catalog.hpp"

namespace m3k {

struct Violation {
  std::string matroid_id;
  std::string matroid_lex01;
  std::string detail;
};

struct CheckReport {
  std::string check_id;
  std::string scope;
  std::uint64_t instances_examined = 0;
  std::uint64_t instances_filtered = 0;
  std::vector<Violation> violations;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return violations.empty(); }
};

struct CheckOptions {
  int jobs = 1;
  // Per-entry instance budget applied to lemma checks on entries with at
  // least 8 elements; 0 disables sampling.
  int sample_budget = 100;
  bool fail_fast = false;
  // When nonempty, minor-quantified checks use exactly these minors instead
  // of every 3-connected minor class.
  std::vector<Matroid> minors;
  bool with_timing = true;
};

// Registered check ids in registry order.
std::vector<std::string> check_ids();
bool is_check_id(const std::string& id);
std::string check_statement(const std::string& id);

CheckReport run_check(const std::string& id, const Catalog& catalog,
                      const CheckOptions& opts);

}  // namespace m3k
