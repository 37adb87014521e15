#include <benchmark/benchmark.h>

#include "eorad/bounds.hpp"
#include "eorad/generators.hpp"
#include "eorad/radii.hpp"

namespace {

using namespace eorad;

void BM_NumericalRadius(benchmark::State& state) {
  Rng rng(1);
  const CMatrix m = ginibre(static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(m).value);
}
BENCHMARK(BM_NumericalRadius)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

// args: dim, d
void BM_EuclideanRadius(benchmark::State& state) {
  Rng rng(2);
  const OperatorTuple a =
      random_tuple(static_cast<int>(state.range(1)), static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_radius(a).value);
}
BENCHMARK(BM_EuclideanRadius)
    ->ArgsProduct({{2, 4, 8}, {1, 2, 3, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_EuclideanRadiusOracle(benchmark::State& state) {
  Rng rng(3);
  const OperatorTuple a = random_tuple(static_cast<int>(state.range(0)), 2, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_radius_oracle(a));
}
BENCHMARK(BM_EuclideanRadiusOracle)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TupleNorm(benchmark::State& state) {
  Rng rng(4);
  const OperatorTuple a = random_tuple(3, static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tuple_op_norm(a));
}
BENCHMARK(BM_TupleNorm)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_PolarPowerBounds(benchmark::State& state) {
  Rng rng(5);
  const OperatorTuple a = random_tuple(2, static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(polar_power_bounds(a, 0.3)[0].value);
}
BENCHMARK(BM_PolarPowerBounds)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_QuarterPolarBound(benchmark::State& state) {
  Rng rng(6);
  const OperatorTuple a = random_tuple(2, static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(quarter_polar_bound(a, 0.5).value);
}
BENCHMARK(BM_QuarterPolarBound)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
