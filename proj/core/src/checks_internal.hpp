#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "m3k/analysis.hpp"
#include "m3k/checks.hpp"

namespace m3k::detail {

struct EntryOutcome {
  std::uint64_t examined = 0;
  std::uint64_t filtered = 0;
  std::vector<Violation> violations;
};

// Deterministic sorted sample of [0, total) of size <= budget, seeded by key.
std::vector<std::uint64_t> sample_indices(std::uint64_t total, int budget,
                                          const std::string& key);

struct CheckCtx {
  const CatalogEntry& entry;
  const CheckOptions& opts;
  EntryOutcome& out;
  bool sampled;  // lemma check on a large entry
  std::string check_id;

  void violation(std::string detail) const {
    out.violations.push_back(
        {entry.id, encode_line(entry.m, LineFormat::lex01), std::move(detail)});
  }
};

// Runs fn over instance indices, thinning deterministically when sampling.
template <typename Fn>
void for_instances(CheckCtx& ctx, std::uint64_t total, const Fn& fn) {
  const std::uint64_t budget = static_cast<std::uint64_t>(ctx.opts.sample_budget);
  if (!ctx.sampled || ctx.opts.sample_budget <= 0 || total <= budget) {
    for (std::uint64_t i = 0; i < total; ++i) fn(i);
    return;
  }
  for (std::uint64_t i : sample_indices(total, ctx.opts.sample_budget,
                                        ctx.check_id + "|" + ctx.entry.id))
    fn(i);
  ctx.out.filtered += total - budget;
}

struct CheckDef {
  std::string id;
  std::string statement;
  bool samples = false;  // participates in large-entry sampling
  std::function<void(CheckCtx&, EntryAnalysis&)> run;
};

const std::vector<CheckDef>& registry();

// Classes of 3-connected minors to quantify over, respecting opts.minors.
// Each item: (class index in a.classes(), display name). Class index is -1
// when an explicitly requested minor is not a minor of the entry.
struct MinorTarget {
  int class_idx;
  std::string name;
};
std::vector<MinorTarget> minor_targets(CheckCtx& ctx, EntryAnalysis& a);

std::string mask_str(Mask m);
std::string sep_str(const VerticalSep3& s);
std::string theta_str(const ThetaSeparator& t);

// Registration helpers implemented by the lemma/theorem translation units.
void register_lemma_checks(std::vector<CheckDef>& defs);
void register_theorem_checks(std::vector<CheckDef>& defs);

}  // namespace m3k::detail
