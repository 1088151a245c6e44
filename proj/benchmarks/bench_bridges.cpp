#include <benchmark/benchmark.h>

#include "bridgeworks/bridgeworks.hpp"

namespace bw = bridgeworks;

namespace {

// Two random trees in separate boxes, as in `bridgeworks bench`.
bw::TreePair instance(std::size_t n) {
  return {bw::gen_random_tree(n, 2), bw::gen_random_tree(n, 3, {200, 0, 300, 100})};
}

void BM_DistanceTable(benchmark::State& state) {
  auto t = bw::gen_random_tree(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bw::DistanceTable<double>(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceTable)->RangeMultiplier(2)->Range(100, 1600)->Complexity(benchmark::oNSquared);

void BM_SolveExact(benchmark::State& state) {
  auto [t1, t2] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bw::solve_exact<double>(t1, t2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveExact)->RangeMultiplier(2)->Range(100, 800)->Complexity(benchmark::oNSquared);

void BM_SolveExactRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto trees = bw::gen_exact_trees(std::vector<std::size_t>{n, n}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bw::solve_exact<bw::Rational>(trees[0], trees[1]));
}
BENCHMARK(BM_SolveExactRational)->Arg(8)->Arg(16)->Arg(24);

void BM_ApproxGreedy(benchmark::State& state) {
  auto [t1, t2] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bw::approx_greedy<double>(t1, t2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxGreedy)->RangeMultiplier(2)->Range(100, 6400)->Complexity(benchmark::oNLogN);

void BM_ClosestPairInterleaved(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = bw::gen_random_tree(n, 4), b = bw::gen_random_tree(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(bw::bichromatic_closest_pair(a.points(), b.points()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosestPairInterleaved)->RangeMultiplier(2)->Range(100, 6400)->Complexity(benchmark::oNLogN);

void BM_ConnectForest(benchmark::State& state) {
  std::vector<bw::WeightedTree> trees;
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(state.range(0)); ++s) {
    trees.push_back(bw::gen_random_tree(50, s + 1, {bw::Rational(200 * static_cast<long>(s)), 0,
                                                    bw::Rational(200 * static_cast<long>(s) + 100), 100}));
  }
  for (auto _ : state) benchmark::DoNotOptimize(bw::connect_forest<double>(trees));
}
BENCHMARK(BM_ConnectForest)->Arg(2)->Arg(4)->Arg(8);

void BM_SolveTwin(benchmark::State& state) {
  auto [t1, t2] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bw::solve_twin<double>(t1, t2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveTwin)->DenseRange(10, 40, 10)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BruteForceTwin(benchmark::State& state) {
  auto [t1, t2] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bw::brute_force_twin<double>(t1, t2));
}
BENCHMARK(BM_BruteForceTwin)->DenseRange(6, 18, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
