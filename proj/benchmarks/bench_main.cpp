// Microbenchmarks for the hot paths: objective evaluation, exact enumeration,
// local search, and the closed forms.
#include <algorithm>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gwline/counterexample.hpp"
#include "gwline/objectives.hpp"
#include "gwline/solvers.hpp"

namespace {

gwline::PointConfiguration make_config(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gap(0.01, 1.0);
  std::vector<double> pts(n);
  double acc = 0.0;
  for (auto& p : pts) {
    acc += gap(rng);
    p = acc;
  }
  return gwline::PointConfiguration(std::move(pts));
}

void BM_AssignmentObjective(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = make_config(1, n);
  const auto y = make_config(2, n);
  std::vector<std::size_t> mapping(n);
  for (std::size_t i = 0; i < n; ++i) mapping[i] = i;
  std::mt19937_64 rng(3);
  std::shuffle(mapping.begin(), mapping.end(), rng);
  const auto sigma = gwline::Permutation::from_zero_based(mapping);
  const gwline::CostParams cost(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwline::assignment_objective(x, y, sigma, cost));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssignmentObjective)->RangeMultiplier(4)->Range(8, 128)->Complexity();

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = make_config(4, n);
  const auto y = make_config(5, n);
  const gwline::CostParams cost(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwline::solve_brute_force(x, y, cost));
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_LocalSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = make_config(6, n);
  const auto y = make_config(7, n);
  const gwline::CostParams cost(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwline::solve_local_search(x, y, cost, 4, 42));
  }
}
BENCHMARK(BM_LocalSearch)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_ClosedForms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double epsilon = 0.5 * gwline::CounterexampleSpec::epsilon_bound(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwline::f_id_closed_form(n, 1.0, epsilon));
    benchmark::DoNotOptimize(gwline::f_cyc_closed_form(n, 1.0, epsilon));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForms)->RangeMultiplier(4)->Range(8, 512)->Complexity();

} // namespace

BENCHMARK_MAIN();
