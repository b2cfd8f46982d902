#include "m3k/checks.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "checks_internal.hpp"
#include "m3k/iso.hpp"

namespace m3k {

namespace detail {

std::vector<std::uint64_t> sample_indices(std::uint64_t total, int budget,
                                          const std::string& key) {
  std::vector<std::uint64_t> all(total);
  for (std::uint64_t i = 0; i < total; ++i) all[i] = i;
  if (budget <= 0 || total <= static_cast<std::uint64_t>(budget)) return all;
  std::uint64_t seed = 1469598103934665603ull;
  for (char c : key) {
    seed ^= static_cast<unsigned char>(c);
    seed *= 1099511628211ull;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < budget; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, total - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(budget);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<MinorTarget> minor_targets(CheckCtx& ctx, EntryAnalysis& a) {
  std::vector<MinorTarget> out;
  if (!ctx.opts.minors.empty()) {
    for (std::size_t i = 0; i < ctx.opts.minors.size(); ++i) {
      const Matroid& n = ctx.opts.minors[i];
      const std::string name = n.provenance().empty()
                                   ? "minor#" + std::to_string(i)
                                   : n.provenance();
      out.push_back({a.classes().find(n), name});
    }
    return out;
  }
  const auto& cls = a.classes().classes;
  for (std::size_t j = 0; j < cls.size(); ++j) {
    if (!cls[j].three_connected) continue;
    out.push_back({static_cast<int>(j),
                   "class" + std::to_string(j) + "(n=" + std::to_string(cls[j].rep.size()) +
                       ",r=" + std::to_string(cls[j].rep.rank()) + ")"});
  }
  return out;
}

std::string mask_str(Mask m) { return format_mask(m); }

std::string sep_str(const VerticalSep3& s) {
  std::ostringstream os;
  os << (s.kind == SepKind::vertical ? "vertical" : "cyclic") << "(" << format_mask(s.x)
     << ",{" << s.e << "}," << format_mask(s.y) << ")";
  return os.str();
}

std::string theta_str(const ThetaSeparator& t) {
  std::ostringstream os;
  os << "theta_sep(W=" << format_mask(t.w) << ",Z=" << format_mask(t.z) << ",n=" << t.n
     << (t.variant == ThetaSeparator::Variant::full ? ",full" : ",minus")
     << (t.orientation == ThetaSeparator::Orientation::primal ? ",primal" : ",dual") << ")";
  return os.str();
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    register_theorem_checks(d);
    register_lemma_checks(d);
    return d;
  }();
  return defs;
}

namespace {

const CheckDef& find_check(const std::string& id) {
  for (const CheckDef& def : registry())
    if (def.id == id) return def;
  throw std::invalid_argument("unknown check id: " + id);
}

}  // namespace

}  // namespace detail

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& def : detail::registry()) out.push_back(def.id);
  return out;
}

bool is_check_id(const std::string& id) {
  for (const auto& def : detail::registry())
    if (def.id == id) return true;
  return false;
}

std::string check_statement(const std::string& id) {
  return detail::find_check(id).statement;
}

CheckReport run_check(const std::string& id, const Catalog& catalog,
                      const CheckOptions& opts) {
  const detail::CheckDef& def = detail::find_check(id);
  const auto start = std::chrono::steady_clock::now();

  const std::size_t n = catalog.entries.size();
  std::vector<detail::EntryOutcome> outcomes(n);

  auto run_entry = [&](std::size_t i) {
    const CatalogEntry& entry = catalog.entries[i];
    const bool sampled =
        def.samples && opts.sample_budget > 0 && entry.m.size() >= 8;
    detail::CheckCtx ctx{entry, opts, outcomes[i], sampled, def.id};
    EntryAnalysis analysis(entry.m);
    def.run(ctx, analysis);
  };

  if (opts.fail_fast || opts.jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      run_entry(i);
      if (opts.fail_fast && !outcomes[i].violations.empty()) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        run_entry(i);
      }
    };
    std::vector<std::thread> pool;
    const int j = std::min<int>(opts.jobs, static_cast<int>(n) == 0 ? 1 : static_cast<int>(n));
    for (int t = 0; t < j; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CheckReport rep;
  rep.check_id = def.id;
  rep.scope = def.statement + " | catalog=" + catalog.spec +
              " (" + std::to_string(n) + " entries)";
  for (auto& o : outcomes) {
    rep.instances_examined += o.examined;
    rep.instances_filtered += o.filtered;
    for (auto& v : o.violations) rep.violations.push_back(std::move(v));
  }
  const auto stop = std::chrono::steady_clock::now();
  rep.elapsed_ms = opts.with_timing
                       ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                             .count()
                       : 0;
  return rep;
}

}  // namespace m3k
