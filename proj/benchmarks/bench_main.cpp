#include <benchmark/benchmark.h>

#include "equilat/branched_cover.hpp"
#include "equilat/census.hpp"
#include "equilat/degree_bound.hpp"
#include "equilat/parallelogram.hpp"

using namespace equilat;

static void BM_CanonicalForm(benchmark::State& state) {
  const GluedSurface s = random_surface(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_Census(benchmark::State& state) {
  CensusOptions opts;
  opts.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_surfaces(static_cast<int>(state.range(0)), {}, opts));
}
BENCHMARK(BM_Census)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_BoundedDegreeMap(benchmark::State& state) {
  const GluedSurface s = random_surface(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_degree_map(s));
}
BENCHMARK(BM_BoundedDegreeMap)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_BuildTH(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_TH(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildTH)->RangeMultiplier(10)->Range(10, 10000);

static void BM_CanonicalCover(benchmark::State& state) {
  const GluedSurface s = bounded_degree_map(random_surface(static_cast<int>(state.range(0)), 5)).b;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_cover(s));
}
BENCHMARK(BM_CanonicalCover)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  GluedSurface s;
  for (const auto& f : enumerate_surfaces(8)) {
    const GluedSurface c = load_surface(f);
    if (euler_and_genus(c).genus == 2 && !detect_structures(c).empty()) {
      s = subdivide(c, 3 * static_cast<int>(state.range(0)));
      break;
    }
  }
  const auto st = detect_structures(s).front();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s, st));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
