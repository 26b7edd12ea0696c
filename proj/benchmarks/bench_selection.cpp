#include <benchmark/benchmark.h>

#include "ras/capacity.hpp"
#include "ras/channel.hpp"
#include "ras/rng.hpp"
#include "ras/selection.hpp"

namespace {

ras::ChannelMatrix channel(std::size_t nr, std::size_t nt) {
  ras::RngStream rng = ras::derive_stream(2020, 0);
  return ras::sample_channel(rng, nr, nt);
}

void BM_Capacity(benchmark::State& state) {
  const auto h = channel(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(ras::capacity(h, 10.0));
}
BENCHMARK(BM_Capacity)->Arg(4)->Arg(8)->Arg(20);

void BM_Greedy(benchmark::State& state) {
  const auto h = channel(128, 8);
  const auto l = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ras::greedy_select(h, l, 10.0));
}
BENCHMARK(BM_Greedy)->Arg(4)->Arg(20);

void BM_BranchAndBound(benchmark::State& state) {
  const auto h = channel(static_cast<std::size_t>(state.range(0)), 8);
  const double rho = ras::db_to_linear(static_cast<double>(state.range(1)));
  std::uint64_t visited = 0;
  for (auto _ : state) {
    const auto r = ras::bab_select(h, 4, rho);
    visited = r.visited_nodes;
    benchmark::DoNotOptimize(r);
  }
  state.counters["visited"] = static_cast<double>(visited);
}
BENCHMARK(BM_BranchAndBound)->Args({64, 0})->Args({64, 20})->Args({128, 10});

void BM_Exhaustive(benchmark::State& state) {
  const auto h = channel(32, 8);
  for (auto _ : state) benchmark::DoNotOptimize(ras::exhaustive_select(h, 3, 10.0));
}
BENCHMARK(BM_Exhaustive);

void BM_AdaptiveGreedy(benchmark::State& state) {
  const auto h = channel(128, 8);
  for (auto _ : state) {
    ras::RngStream rng = ras::derive_stream(2020, 1);
    ras::RowOracle rows(h, rng);
    benchmark::DoNotOptimize(ras::adaptive_select(rows, ras::AdaptiveConfig::greedy(1e6, 20, 10.0)));
  }
}
BENCHMARK(BM_AdaptiveGreedy);

}  // namespace
