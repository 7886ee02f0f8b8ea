#include <benchmark/benchmark.h>

#include "dtopw/approximation.hpp"
#include "dtopw/constructions.hpp"
#include "dtopw/gallery.hpp"
#include "dtopw/johnstone.hpp"
#include "dtopw/lattice_analysis.hpp"
#include "dtopw/suites.hpp"

namespace {

using namespace dtopw;

void BM_EnumeratePosets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(n).size());
}
BENCHMARK(BM_EnumeratePosets)->DenseRange(3, 5);

void BM_DTopology(benchmark::State& state) {
  const auto spaces = enumerate_posets(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& p : spaces) benchmark::DoNotOptimize(d_topology(alexandroff(p)).opens().size());
  }
}
BENCHMARK(BM_DTopology)->DenseRange(3, 4);

void BM_ContinuousLattice(benchmark::State& state) {
  const auto l = open_lattice(power(sierpinski(), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_continuous_lattice(l));
}
BENCHMARK(BM_ContinuousLattice)->DenseRange(2, 3);

void BM_Exponential(benchmark::State& state) {
  const auto x = power(sierpinski(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(exponential(x, sierpinski()).maps.size());
}
BENCHMARK(BM_Exponential);

void BM_GalleryClaims(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_gallery_claims("example_P_scott", 10).passed());
}
BENCHMARK(BM_GalleryClaims);

void BM_SchemaSoundness(benchmark::State& state) {
  const auto s = gallery_space("johnstone_scott");
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schema_soundness(*s, depth).checks);
}
BENCHMARK(BM_SchemaSoundness)->DenseRange(4, 6);

void BM_JohnstoneIrreducible(benchmark::State& state) {
  const auto elems = enumerate_fragment(5, 2, 1);
  for (auto _ : state) {
    int n = 0;
    for (const auto& a : elems) n += j_irreducible(a) ? 1 : 0;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_JohnstoneIrreducible);

}  // namespace

BENCHMARK_MAIN();
