// Benchmarks for the top-intersection paths.
//
// Build in Release; the boundary number at g = 64 is the reference workload.

#include <random>

#include <benchmark/benchmark.h>

#include "chow/derivations.hpp"
#include "chow/models.hpp"
#include "chow/oracle.hpp"

namespace {

void BM_MumfordBoundary(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto value = chow::mumford_boundary_number(g, 1);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_MumfordBoundary)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LevelBranch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto value = chow::level_branch_number(8, 2, m);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_LevelBranch)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_TrickExpanded(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const chow::Rational a(3, 2), b(-1, 3);
  for (auto _ : state) {
    auto value = chow::trick_T_expanded(a, b, g, 1);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_TrickExpanded)->Arg(4)->Arg(10)->Arg(20);

// Sparse reduced expansion against the dense oracle on the same product.
void BM_EvaluateVsOracle(benchmark::State& state) {
  const bool oracle = state.range(0) != 0;
  const auto model = chow::make_poincare_ring(5, 1);
  std::mt19937_64 rng(7);
  const auto factors = chow::random_top_factors(model, rng);
  for (auto _ : state) {
    if (oracle) {
      benchmark::DoNotOptimize(chow::brute_force_oracle(model, factors));
    } else {
      chow::ClassExpr product = chow::ClassExpr::one();
      for (const auto& f : factors) product = chow::reduced_mul(product, f, model.system());
      benchmark::DoNotOptimize(chow::evaluate_top_number(model, product));
    }
  }
}
BENCHMARK(BM_EvaluateVsOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
