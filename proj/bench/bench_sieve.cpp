// Serial reference sieve vs the OpenMP kernel, plus table construction.

#include <benchmark/benchmark.h>

#include "mx1/sieve.hpp"
#include "mx1/stopping_table.hpp"

namespace {

const mx1::MapParams M3 = mx1::MapParams::make(3);

void BM_SieveReference(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mx1::sieve_counts_reference(k, M3));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k));
}

void BM_SieveParallel(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mx1::sieve_counts(k, M3));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k));
}

void BM_ChiTable(benchmark::State& state) {
  const auto kmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mx1::chi_table(kmax, M3));
}

}  // namespace

BENCHMARK(BM_SieveReference)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveParallel)->Arg(14)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiTable)->Arg(100)->Arg(900)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
