// Serial reference kernels against their OpenMP counterparts.
// Arg 0 selects Execution::Serial, arg 1 Execution::Parallel.

#include <benchmark/benchmark.h>

#include "brf/bezout.hpp"
#include "brf/ideal.hpp"
#include "brf/linalg.hpp"
#include "brf/random_inputs.hpp"

namespace {

brf::Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? brf::Execution::Serial : brf::Execution::Parallel;
}

brf::SystemProfile dense_system(std::uint64_t seed, std::size_t n, int degree) {
  brf::CaseRng rng(seed, 0);
  std::vector<brf::Poly> polys;
  for (std::size_t i = 0; i < n; ++i) polys.push_back(brf::random_poly(rng, n, degree, 10));
  return brf::SystemProfile(std::move(polys));
}

void BM_Echelonize(benchmark::State& state) {
  brf::SystemProfile f = dense_system(3, 3, 3);
  brf::MacaulayMatrix m = brf::macaulay_matrix(f, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(brf::echelonize(m.entries, exec_of(state)));
  state.counters["rows"] = static_cast<double>(m.entries.rows());
  state.counters["cols"] = static_cast<double>(m.entries.cols());
}
BENCHMARK(BM_Echelonize)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);

void BM_ProductFunctional(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  brf::SystemProfile f = dense_system(5, n, 2);
  brf::CaseRng rng(5, 1);
  brf::Functional l1 = brf::random_root_functional(rng, f, f.delta_f() + 1);
  brf::Functional l2 = brf::random_root_functional(rng, f, f.delta_f() + 1);
  for (auto _ : state) benchmark::DoNotOptimize(brf::product_functional(l1, 1, l2, 1, f, {}, exec_of(state)));
}
BENCHMARK(BM_ProductFunctional)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_RootBasis(benchmark::State& state) {
  brf::SystemProfile f = dense_system(7, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(brf::root_functional_basis(f, 6, brf::kDefaultColumnCap, exec_of(state)));
}
BENCHMARK(BM_RootBasis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
