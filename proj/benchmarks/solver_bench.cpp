#include <benchmark/benchmark.h>

#include "atsp/hybrids.hpp"
#include "atsp/instance_io.hpp"
#include "atsp/solvers.hpp"

namespace {

atsp::Instance make_instance(int n, std::uint64_t seed) {
  atsp::GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  atsp::RandomSource src(seed);
  return atsp::generate_instance(cfg, src);
}

void BM_EvaluateTour(benchmark::State& state) {
  auto inst = make_instance(static_cast<int>(state.range(0)), 1);
  atsp::RandomSource src(2);
  auto order = atsp::detail::random_tour_order(inst, src);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atsp::evaluate_tour(inst, order));
  }
}
BENCHMARK(BM_EvaluateTour)->Arg(14)->Arg(50)->Arg(200);

void BM_SolveExact(benchmark::State& state) {
  auto inst = make_instance(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atsp::solve_exact(inst));
  }
}
BENCHMARK(BM_SolveExact)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SolveGa(benchmark::State& state) {
  auto inst = make_instance(14, 4);
  atsp::GaParams params;
  for (auto _ : state) {
    atsp::RandomSource src(5);
    benchmark::DoNotOptimize(
        atsp::solve_ga(inst, params, atsp::Budget{state.range(0)}, src));
  }
}
BENCHMARK(BM_SolveGa)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_SolveSa(benchmark::State& state) {
  auto inst = make_instance(14, 4);
  atsp::SaParams params;
  for (auto _ : state) {
    atsp::RandomSource src(5);
    benchmark::DoNotOptimize(
        atsp::solve_sa(inst, params, atsp::Budget{state.range(0)}, src));
  }
}
BENCHMARK(BM_SolveSa)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_ClusterHeuristic(benchmark::State& state) {
  auto inst = make_instance(static_cast<int>(state.range(0)), 6);
  atsp::KMeansParams params;
  for (auto _ : state) {
    atsp::RandomSource src(7);
    benchmark::DoNotOptimize(atsp::solve_cluster_heuristic(inst, params, src));
  }
}
BENCHMARK(BM_ClusterHeuristic)->Arg(14)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
