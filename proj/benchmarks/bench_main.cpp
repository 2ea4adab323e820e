#include <benchmark/benchmark.h>

#include <random>

#include "qml/correspondence.hpp"
#include "qml/stability.hpp"

using namespace qml;

namespace {

void BM_Rref(benchmark::State& state) {
  const PrimeField f(3);
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(16)->Arg(64);

void BM_Subspaces(benchmark::State& state) {
  const PrimeField f(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(f, n, n / 2));
}
BENCHMARK(BM_Subspaces)->Arg(4)->Arg(6);

void BM_StabilityTable(benchmark::State& state) {
  const PrimeField f(2);
  auto q = subspace_quiver(static_cast<std::size_t>(state.range(0)));
  DimVector alpha = state.range(0) == 3 ? DimVector{1, 1, 1, 2} : DimVector{1, 1, 1, 1, 2};
  StabilityParam theta = state.range(0) == 3 ? StabilityParam{2, 2, 2, -3} : StabilityParam{2, 2, 2, 2, -4};
  for (auto _ : state) benchmark::DoNotOptimize(stability_table(q, alpha, theta, f, Budget::unlimited()));
}
BENCHMARK(BM_StabilityTable)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Correspondence(benchmark::State& state) {
  const PrimeField f(2);
  auto q = subspace_quiver(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_correspondence(q, {1, 1, 1, 2}, {2, 2, 2, -3}, f, 13, Budget::unlimited()));
}
BENCHMARK(BM_Correspondence)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
