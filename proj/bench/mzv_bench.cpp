// Harmonic sum tables: serial per-index reference vs prefix-shared DP vs the
// prefix-shared DP spread over primes with OpenMP.

#include <benchmark/benchmark.h>

#include "mzv/harmonic_sums.hpp"
#include "mzv/operators.hpp"

using namespace mzv;

namespace {

void run_table(benchmark::State& state, Kernel kernel, int workers) {
  const auto indices = indices_up_to_weight(static_cast<std::uint32_t>(state.range(0)));
  const auto primes = primes_in(2, static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    auto table = harmonic_sum_table(indices, primes, false, {workers, kernel});
    benchmark::DoNotOptimize(table.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(indices.size() * primes.size()));
}

void BM_Reference(benchmark::State& state) { run_table(state, Kernel::Reference, 1); }
void BM_PrefixShared(benchmark::State& state) { run_table(state, Kernel::PrefixShared, 1); }
void BM_PrefixSharedOpenMP(benchmark::State& state) {
  run_table(state, Kernel::PrefixShared, static_cast<int>(state.range(2)));
}

void BM_Phi(benchmark::State& state) {
  const auto w = static_cast<std::uint32_t>(state.range(0));
  IndexCombination c;
  for (const Index& k : indices_up_to_weight(w))
    if (k.weight() == w) c.add(k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(phi(c).size());
}

void BM_PhiLiteral(benchmark::State& state) {
  const auto w = static_cast<std::uint32_t>(state.range(0));
  IndexCombination c;
  for (const Index& k : indices_up_to_weight(w))
    if (k.weight() == w) c.add(k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(phi_literal(c).size());
}

}  // namespace

BENCHMARK(BM_Reference)->Args({6, 200})->Args({8, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefixShared)->Args({6, 200})->Args({8, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefixSharedOpenMP)
    ->Args({8, 1000, 2})
    ->Args({8, 1000, 4})
    ->Args({8, 1000, 8})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Phi)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiLiteral)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
