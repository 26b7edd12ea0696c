#include <benchmark/benchmark.h>

#include "ras/bounds.hpp"
#include "ras/rng.hpp"
#include "ras/sampling.hpp"

namespace {

void BM_BfParams(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ras::bf_bound_params(128, 8, 4, 6.3));
}
BENCHMARK(BM_BfParams);

void BM_MrcParams(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ras::mrc_bound_params(128, 8, 16, 1.0));
}
BENCHMARK(BM_MrcParams);

void BM_SampleBf(benchmark::State& state) {
  ras::RngStream rng = ras::derive_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(ras::sample_bf_bound(rng, 128, 8, 4, 6.3));
}
BENCHMARK(BM_SampleBf);

}  // namespace
