#include <benchmark/benchmark.h>

#include "vpart/formula.hpp"
#include "vpart/oracle.hpp"
#include "vpart/separation.hpp"

using namespace vpart;

namespace {

System a2(int h) { return System(2, {{1, 0}, {0, 1}, {1, 1}}, {h, h, h}); }
System nonuni(int h) { return System(2, {{1, 0}, {0, 1}, {1, 2}}, {h, h, h}); }

void BM_PartitionA2(benchmark::State& st) {
  Arrangement arr(a2(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(partition_quasipoly(arr, arr.chamber("c1")));
}
BENCHMARK(BM_PartitionA2)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PartitionNonUnimodular(benchmark::State& st) {
  Arrangement arr(nonuni(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(partition_quasipoly(arr, arr.chamber("c1")));
}
BENCHMARK(BM_PartitionNonUnimodular)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Chambers(benchmark::State& st) {
  System s(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  for (auto _ : st) benchmark::DoNotOptimize(Arrangement(s));
}
BENCHMARK(BM_Chambers)->Unit(benchmark::kMillisecond);

void BM_EvaluateFormula(benchmark::State& st) {
  Arrangement arr(nonuni(3));
  auto q = partition_quasipoly(arr, arr.chamber("c1"));
  long long k = 0;
  for (auto _ : st) benchmark::DoNotOptimize(q.evaluate({40 + k % 7, 20 + k++ % 5}));
}
BENCHMARK(BM_EvaluateFormula);

void BM_CountPoints(benchmark::State& st) {
  System s = a2(2);
  const long long m = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(count_points(s, {2 * m, m}));
}
BENCHMARK(BM_CountPoints)->RangeMultiplier(2)->Range(4, 32);

void BM_AdmissibleDecompose(benchmark::State& st) {
  MeroFunction f{2, {{CycNumber(1), {0, 0}}}, {{Rat(0), {1, 0}}, {Rat(1, 3), {0, 1}}, {Rat(1, 4), {1, 1}}, {Rat(0), {1, 2}}}};
  RatVec mu = {Rat(3, 2), Rat(7, 4)};
  for (auto _ : st) benchmark::DoNotOptimize(admissible_decompose(f, mu));
}
BENCHMARK(BM_AdmissibleDecompose)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
