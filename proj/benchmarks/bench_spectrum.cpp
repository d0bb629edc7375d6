#include <benchmark/benchmark.h>

#include <random>

#include "jspec/inverse.hpp"
#include "jspec/periodic_operator.hpp"
#include "jspec/trace.hpp"

using namespace jspec;

namespace {

PeriodicOperator random_op(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 0.5);
  std::vector<cplx> a(n), b(n), c(n);
  for (int k = 0; k < n; ++k) a[k] = {g(rng), g(rng)}, b[k] = {g(rng), g(rng)}, c[k] = {g(rng), g(rng)};
  return PeriodicOperator(a, b, c);
}

void BM_Roots(benchmark::State& state) {
  const auto p = discriminant(random_op(static_cast<int>(state.range(0)), 1)).p;
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->RangeMultiplier(2)->Range(2, 32);

void BM_Discriminant(benchmark::State& state) {
  const auto op = random_op(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(op));
}
BENCHMARK(BM_Discriminant)->RangeMultiplier(2)->Range(2, 32);

void BM_StructureReport(benchmark::State& state) {
  const auto d = discriminant(random_op(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(structure_report(d));
}
BENCHMARK(BM_StructureReport)->RangeMultiplier(2)->Range(2, 16);

void BM_TracePetals(benchmark::State& state) {
  const auto d = discriminant(example_petals(0.125));
  for (auto _ : state) benchmark::DoNotOptimize(trace_spectrum(d));
}
BENCHMARK(BM_TracePetals)->Unit(benchmark::kMillisecond);

void BM_TraceLaplacian(benchmark::State& state) {
  const auto d = discriminant(laplacian(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(trace_spectrum(d));
}
BENCHMARK(BM_TraceLaplacian)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SolveB(benchmark::State& state) {
  const auto a = example_interval3_a(), c = example_interval3_c();
  const auto target = chebyshev_like(3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_b(target, a, c));
}
BENCHMARK(BM_SolveB)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
