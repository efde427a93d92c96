#include <benchmark/benchmark.h>

#include "addcomp/constructions.hpp"
#include "addcomp/mset.hpp"
#include "addcomp/truncated_set.hpp"
#include "addcomp/verify.hpp"

using namespace addcomp;

namespace {

MSet half_base27() { return MSet(27, expand(Rational::parse("1/2"), 27)); }

void BM_TruncateMSet(benchmark::State& state) {
  const MSet m = half_base27();
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncate(m, N));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TruncateMSet)->Range(1 << 16, 1 << 22);

// Dense against sparse: the shape of every coverage check.
void BM_SumsetSparse(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  const TruncatedSet a = truncate(half_base27(), N);
  const TruncatedSet b = truncate(geometric_progression(1, 2, N), N);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SumsetSparse)->Range(1 << 16, 1 << 22);

// Two dense operands: the avoider certificates.
void BM_SumsetDense(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  const TruncatedSet a = dyadic_avoider(Rational::parse("5/8")).truncate(N);
  const TruncatedSet b = complement_in_N(a);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b, ExecConfig{0}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SumsetDense)->Range(1 << 10, 1 << 14);

void BM_Coverage(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  const TruncatedSet a = truncate(half_base27(), N);
  const TruncatedSet b = truncate(geometric_progression(1, 2, N), N);
  for (auto _ : state) benchmark::DoNotOptimize(verify::coverage_exceptions(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Coverage)->Range(1 << 16, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
