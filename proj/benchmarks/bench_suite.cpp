#include <benchmark/benchmark.h>

#include "eorad/verify.hpp"

namespace {

using namespace eorad;

// One trial of each verification family; the suite cost is trials x sum of these.
void BM_SuiteTrial(benchmark::State& state, const std::string& family) {
  const SuiteConfig cfg;
  std::uint64_t index = 0;
  for (auto _ : state) {
    auto recs = run_trial(family, index++ % 64, cfg);
    benchmark::DoNotOptimize(recs.data());
  }
}

const int registered = [] {
  for (const auto& family : all_families()) {
    benchmark::RegisterBenchmark(("BM_SuiteTrial/" + family).c_str(), BM_SuiteTrial, family)
        ->Unit(benchmark::kMillisecond);
  }
  return 0;
}();

}  // namespace
