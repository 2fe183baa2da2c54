#include "cobsec/chern_geometry.hpp"
#include "cobsec/cobordism_algebra.hpp"
#include "cobsec/linalg.hpp"
#include "cobsec/obstruction.hpp"
#include "cobsec/symmetric_functions.hpp"

#include <benchmark/benchmark.h>

// Uncached work only: the library memoizes transition tables and s-matrices,
// so the benchmarks call the building blocks directly.

static void BM_ElementaryInMonomial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto basis = cobsec::enumerate(d);
  for (auto _ : state) {
    for (const auto& lambda : basis) benchmark::DoNotOptimize(cobsec::elementary_in_monomial(lambda));
  }
  state.SetLabel("p(d)=" + std::to_string(basis.size()));
}
BENCHMARK(BM_ElementaryInMonomial)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ChernNumbersProjectiveLines(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const cobsec::ManifoldModel m(std::vector<int>(static_cast<std::size_t>(d), 1));
  for (auto _ : state) benchmark::DoNotOptimize(cobsec::chern_numbers(m));
}
BENCHMARK(BM_ChernNumbersProjectiveLines)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_StongDeterminant(benchmark::State& state) {
  const auto s = cobsec::s_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cobsec::determinant(s->entries));
}
BENCHMARK(BM_StongDeterminant)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_KernelBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  cobsec::s_matrix(d);
  for (auto _ : state) benchmark::DoNotOptimize(cobsec::kernel_basis(d, d / 2));
}
BENCHMARK(BM_KernelBasis)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
