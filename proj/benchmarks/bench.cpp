#include <benchmark/benchmark.h>

#include "hypercover/ass_primes.hpp"
#include "hypercover/cover.hpp"
#include "hypercover/monomial_ideal.hpp"

using namespace hypercover;

namespace {

void BM_MinimalVertexCovers(benchmark::State& state) {
  const Hypergraph h = family_t2(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_vertex_covers(h));
  }
}
BENCHMARK(BM_MinimalVertexCovers)->Arg(7)->Arg(10)->Arg(13);

void BM_SplitAllOnes(benchmark::State& state) {
  const Hypergraph h = complete(static_cast<int>(state.range(0)), 3);
  const CoverVector ones(h.vertex_count(), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_into_one_covers(h, ones, 2));
  }
}
BENCHMARK(BM_SplitAllOnes)->Arg(8)->Arg(10);

void BM_EmbeddedPrimes(benchmark::State& state) {
  const Hypergraph h = family_t2(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embedded_primes(h));
  }
}
BENCHMARK(BM_EmbeddedPrimes)->Arg(9)->Arg(11)->Arg(13);

void BM_AssOracle(benchmark::State& state) {
  const Hypergraph h = family_t2(static_cast<int>(state.range(0)));
  const MonomialIdeal square = dual_power_ordinary(h, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ass_oracle(square, 2));
  }
}
BENCHMARK(BM_AssOracle)->Arg(9)->Arg(11)->Arg(13);

void BM_DualPowerSymbolic(benchmark::State& state) {
  const Hypergraph h = family_t2(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_power_symbolic(h, 2));
  }
}
BENCHMARK(BM_DualPowerSymbolic)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
