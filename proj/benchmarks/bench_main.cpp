#include <benchmark/benchmark.h>

#include "m3k/analysis.hpp"
#include "m3k/catalog.hpp"
#include "m3k/connectivity.hpp"
#include "m3k/constructions.hpp"
#include "m3k/elasticity.hpp"
#include "m3k/iso.hpp"
#include "m3k/structures.hpp"

namespace {

using namespace m3k;

void bm_rank_table_from_bases(benchmark::State& state) {
  const auto bases = k_subsets_lex(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(from_bases(static_cast<int>(state.range(0)), bases));
}
BENCHMARK(bm_rank_table_from_bases)->Arg(7)->Arg(9);

void bm_canonical_form(benchmark::State& state) {
  const Matroid m = state.range(0) == 0 ? fano() : l8();
  for (auto _ : state) {
    // relabel defeats the memo so the search itself is measured
    static int spin = 0;
    std::vector<int> perm(m.size());
    for (int i = 0; i < m.size(); ++i) perm[i] = (i + spin) % m.size();
    ++spin;
    benchmark::DoNotOptimize(canonical_form(relabel(m, perm)));
  }
}
BENCHMARK(bm_canonical_form)->Arg(0)->Arg(1);

void bm_vertical_separations(benchmark::State& state) {
  const Matroid m = theta(4).first;
  for (auto _ : state) benchmark::DoNotOptimize(vertical_3_separations(m));
}
BENCHMARK(bm_vertical_separations);

void bm_theta_separators(benchmark::State& state) {
  const Matroid m = theta(4).first;
  for (auto _ : state) benchmark::DoNotOptimize(theta_separators(m));
}
BENCHMARK(bm_theta_separators);

void bm_maximal_fans_wheel(benchmark::State& state) {
  const Matroid m = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_fans(m));
}
BENCHMARK(bm_maximal_fans_wheel)->Arg(3)->Arg(4);

void bm_minor_classes(benchmark::State& state) {
  const Matroid m = l8();
  for (auto _ : state) benchmark::DoNotOptimize(minor_classes(m));
}
BENCHMARK(bm_minor_classes);

void bm_elasticity_report(benchmark::State& state) {
  const Matroid m = l8();
  const Matroid n = uniform(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(elasticity_report(m, n));
}
BENCHMARK(bm_elasticity_report);

void bm_gen_catalog(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gen_catalog(2, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_gen_catalog)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
