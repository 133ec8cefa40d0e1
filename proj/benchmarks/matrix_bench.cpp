#include <benchmark/benchmark.h>

#include "common.hpp"
#include "possmc/matrix.hpp"

namespace {

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const possmc::FuzzyMatrix a = bench::random_matrix(n, 1);
  const possmc::FuzzyMatrix b = bench::random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(possmc::compose(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_TransitiveClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const possmc::FuzzyMatrix a = bench::random_matrix(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(possmc::transitive_closure(a));
}
BENCHMARK(BM_TransitiveClosure)->RangeMultiplier(2)->Range(8, 64);

void BM_PathSupremum(benchmark::State& state) {
  const possmc::Gpks m = bench::random_model(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(possmc::r_p(m));
}
BENCHMARK(BM_PathSupremum)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
