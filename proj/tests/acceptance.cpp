// Acceptance suite: one pass/fail line per criterion. Runs the golden facts,
// the full check registry over the generated catalogs at desk scale, the
// kernel property sweep and the determinism contract.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "m3k/analysis.hpp"
#include "m3k/basis.hpp"
#include "m3k/catalog.hpp"
#include "m3k/checks.hpp"
#include "m3k/connectivity.hpp"
#include "m3k/constructions.hpp"
#include "m3k/elasticity.hpp"
#include "m3k/family.hpp"
#include "m3k/iso.hpp"
#include "m3k/report.hpp"
#include "m3k/structures.hpp"

using namespace m3k;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

struct Criterion {
  std::string label;
  std::chrono::steady_clock::time_point start;
  bool ok = true;
  std::ostringstream why;

  explicit Criterion(std::string l)
      : label(std::move(l)), start(std::chrono::steady_clock::now()) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << (why.str().empty() ? "" : "; ") << what;
    }
  }

  ~Criterion() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", label.c_str(),
                static_cast<long long>(ms), ok ? "" : " -- ", ok ? "" : why.str().c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

void run_registry_group(const Catalog& cat, const std::vector<std::string>& ids,
                        const std::string& label, int jobs) {
  Criterion c(label);
  CheckOptions opts;
  opts.jobs = jobs;
  for (const auto& id : ids) {
    const CheckReport rep = run_check(id, cat, opts);
    std::ostringstream line;
    line << "    " << id << ": examined=" << rep.instances_examined
         << " filtered=" << rep.instances_filtered
         << " violations=" << rep.violations.size() << " (" << rep.elapsed_ms << " ms)";
    g_notes.push_back(line.str());
    c.require(rep.passed(), id + " has " + std::to_string(rep.violations.size()) +
                                " violation(s): " +
                                (rep.violations.empty() ? "" : rep.violations[0].detail));
  }
}

Matroid random_gf_matroid(int p, int n, int r, std::mt19937& rng) {
  while (true) {
    std::vector<std::vector<int>> rows(r, std::vector<int>(n));
    for (auto& row : rows)
      for (auto& v : row) v = static_cast<int>(rng() % p);
    const Matroid m = from_linear_rep(p, rows);
    if (m.rank() == r) return m;
  }
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  {
    Criterion c("criterion 1: construction goldens");
    c.require(is_isomorphic(theta(2).first, direct_sum(uniform(1, 2), uniform(1, 2))),
              "theta(2) != U12+U12");
    c.require(is_isomorphic(theta(3).first, mk4()), "theta(3) != M(K4)");
    const auto fans = maximal_fans(theta_minus(3).first);
    c.require(fans.size() == 1 && fans[0].length() == 5,
              "theta_minus(3) maximal fan is not unique of length 5");
    for (int n = 2; n <= 5; ++n) {
      const auto [t, lab] = theta(n);
      const Matroid ref = minor(t, 0, bit(lab.w[0])).first;
      for (int i = 1; i < n; ++i)
        c.require(is_isomorphic(ref, minor(t, 0, bit(lab.w[i])).first),
                  "theta minus different w's disagree at n=" + std::to_string(n));
    }
  }

  {
    Criterion c("criterion 2: L8 goldens");
    const Matroid m = l8();
    c.require(is_n_connected(m, 3), "L8 not 3-connected");
    const Mask x = bit(0) | bit(1) | bit(2) | bit(3);
    const Mask y = bit(5) | bit(6) | bit(7);
    bool listed = false;
    for (const auto& s : cyclic_3_separations(m))
      if (s.e == 4 && (s.x == x || s.y == x)) listed = true;
    c.require(listed, "({x1..x4},{e},{y1,y2,y3}) not detected as cyclic");
    c.require(is_vertical_sep3(m, {x, 4, y, SepKind::cyclic}), "predicate rejects the triple");
    const ElasticityReport rep = elasticity_report(m, uniform(2, 4));
    c.require(has_bit(rep.elastic, 0), "x1 not elastic");
    c.require(!has_bit(rep.n_elastic, 0), "x1 is U24-elastic");
    for (int e : {1, 2, 3})
      c.require(has_bit(rep.n_elastic, e), "x" + std::to_string(e + 1) + " not U24-elastic");
  }

  {
    Criterion c("criterion 3: counterexample goldens");
    c.require(n_elastic_elements(uniform(2, 5), uniform(1, 3)) == 0,
              "U25 has U13-elastic elements");
    c.require(n_elastic_elements(fano(), uniform(1, 3)) == 0, "F7 has U13-elastic elements");
  }

  const Catalog cat = load_catalog_spec("gen:gf2:8,gen:gf3:8");
  {
    std::ostringstream line;
    line << "    catalog gen:gf2:8,gen:gf3:8 holds " << cat.entries.size() << " entries";
    g_notes.push_back(line.str());
  }

  run_registry_group(cat, {"THM-ELASTIC4"}, "criterion 4: THM-ELASTIC4 exhaustive", 1);
  run_registry_group(cat,
                     {"THM-MAIN", "THM-MAXIMAL", "THM-FANS", "THM-PW3", "THM-MINELTS2",
                      "PROP-SMALLN"},
                     "criterion 5: splitter-theorem checks", 4);
  run_registry_group(cat, {"WW-LB4", "WW-PW3", "WW-EXISTS5", "THM-ROBUST-I", "THM-ROBUST-II"},
                     "criterion 6: fixed-basis checks", 4);
  {
    std::vector<std::string> lems;
    for (const auto& id : check_ids())
      if (id.rfind("LEM-", 0) == 0) lems.push_back(id);
    run_registry_group(cat, lems, "criterion 7: lemma suite", 4);
  }

  {
    Criterion c("criterion 8: kernel properties");
    int small_entries = 0;
    std::mt19937 rng(20260810);
    for (const auto& entry : cat.entries) {
      const Matroid& m = entry.m;
      if (m.size() > 7) continue;
      ++small_entries;
      std::string why;
      c.require(m.validate(&why), entry.id + " axioms: " + why);
      c.require(dual(dual(m)) == m, entry.id + " dual involution");
      const Matroid d = dual(m);
      bool lam = true;
      for (Mask xx = 0; xx <= m.ground(); ++xx) {
        if (m.rank(xx) + m.rank(m.ground() & ~xx) - m.rank() !=
            d.rank(xx) + d.rank(d.ground() & ~xx) - d.rank())
          lam = false;
        if (xx == m.ground()) break;
      }
      c.require(lam, entry.id + " lambda self-duality");
      c.require(cosimplify(d).first == dual(simplify(m).first), entry.id + " si/co duality");
      c.require(from_circuits(m.size(), circuits(m)) == m, entry.id + " circuit round trip");
      if (m.size() >= 1) {
        std::vector<int> perm(m.size());
        std::iota(perm.begin(), perm.end(), 0);
        const std::string canon = canonical_form(m);
        for (int t = 0; t < 5; ++t) {
          std::shuffle(perm.begin(), perm.end(), rng);
          c.require(canonical_form(relabel(m, perm)) == canon,
                    entry.id + " canonical form perm-variance");
        }
      }
    }
    c.require(small_entries > 100, "catalog has too few small entries");

    // randomized larger sizes
    std::vector<Matroid> big = {theta(5).first, uniform(3, 9), whirl(4), uniform(5, 10)};
    for (int i = 0; i < 4; ++i) big.push_back(random_gf_matroid(2, 8 + i % 3, 4, rng));
    for (int i = 0; i < 4; ++i) big.push_back(random_gf_matroid(3, 8 + i % 3, 3 + i % 2, rng));
    for (const Matroid& m : big) {
      std::string why;
      c.require(m.validate(&why), "random matroid axioms: " + why);
      c.require(dual(dual(m)) == m, "random dual involution");
      const Matroid d = dual(m);
      for (int t = 0; t < 200; ++t) {
        const Mask xx = static_cast<Mask>(rng()) & m.ground();
        c.require(m.rank(xx) + m.rank(m.ground() & ~xx) - m.rank() ==
                      d.rank(xx) + d.rank(d.ground() & ~xx) - d.rank(),
                  "random lambda self-duality");
      }
      c.require(cosimplify(d).first == dual(simplify(m).first), "random si/co duality");
      std::vector<int> perm(m.size());
      std::iota(perm.begin(), perm.end(), 0);
      const std::string canon = canonical_form(m);
      for (int t = 0; t < 3; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        c.require(canonical_form(relabel(m, perm)) == canon,
                  "random canonical form perm-invariance");
      }
    }
  }

  {
    Criterion c("criterion 9: theta separator detection and revealing");
    const Matroid t4 = theta(4).first;
    c.require(t4.rank() == 4 && t4.corank() == 4, "theta(4) rank/corank preconditions");
    c.require(!theta_separators(t4).empty(), "no separator detected in theta(4)");
    c.require(elastic_elements(t4) == 0, "theta(4) has elastic elements");
    const Matroid u23 = uniform(2, 3);
    int seps_seen = 0;
    for (const auto& entry : cat.entries) {
      if (!is_n_connected(entry.m, 3)) continue;
      for (const auto& sep : theta_separators(entry.m)) {
        ++seps_seen;
        c.require(reveals(entry.m, sep, u23),
                  entry.id + ": separator does not reveal U(2,3)");
      }
    }
    c.require(seps_seen > 0, "no separator anywhere in the catalog");
    std::ostringstream line;
    line << "    separators checked for revealing U(2,3): " << seps_seen;
    g_notes.push_back(line.str());
  }

  {
    Criterion c("criterion 10: determinism across runs and job counts");
    CheckOptions a, b;
    a.jobs = 1;
    b.jobs = 8;
    a.with_timing = b.with_timing = false;
    for (const std::string id : {"THM-ELASTIC4", "THM-MAIN", "LEM-UNCROSS"}) {
      const std::string r1 = render_report(run_check(id, cat, a), ReportFormat::json);
      const std::string r2 = render_report(run_check(id, cat, b), ReportFormat::json);
      const std::string r3 = render_report(run_check(id, cat, a), ReportFormat::json);
      c.require(r1 == r2, id + " differs between jobs 1 and 8");
      c.require(r1 == r3, id + " differs between two identical runs");
    }
  }

  for (const auto& note : g_notes) std::puts(note.c_str());
  const auto total = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  std::printf("%d criterion failure(s); total %lld s\n", g_failures,
              static_cast<long long>(total));
  return g_failures == 0 ? 0 : 1;
}
