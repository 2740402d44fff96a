#include "pgzero/bidouble.hpp"
#include "pgzero/constructions.hpp"
#include "pgzero/nodal_codes.hpp"
#include "pgzero/plane_geometry.hpp"

#include <benchmark/benchmark.h>

using namespace pgzero;

static void BM_H0FatPoints(benchmark::State& state) {
  const auto cfg = standard_quadrilateral(true, false);
  const auto d = state.range(0);
  FatPointSystem sys{d, {}};
  for (std::size_t i = 1; i <= 7; ++i) sys.assignments.emplace_back(i, 2);
  for (auto _ : state) benchmark::DoNotOptimize(h0_fat_points(cfg, sys));
}
BENCHMARK(BM_H0FatPoints)->DenseRange(4, 12, 2);

static void BM_DeCode(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(de_code(s).elements().size());
}
BENCHMARK(BM_DeCode)->DenseRange(4, 16, 4);

static void BM_CodeOfClasses(benchmark::State& state) {
  std::vector<DivisorClass> nodes;
  for (std::size_t i = 1; i + 1 <= 12; i += 2) nodes.push_back(DivisorClass::exceptional(13, i) - DivisorClass::exceptional(13, i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(code_of_classes(nodes).dimension());
}
BENCHMARK(BM_CodeOfClasses);

static void BM_AnalyzeExample2(benchmark::State& state) {
  const auto c = example2();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c.data, c.cfg, c.pencil));
}
BENCHMARK(BM_AnalyzeExample2);
BENCHMARK_MAIN();
