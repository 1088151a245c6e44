#include <benchmark/benchmark.h>

#include "bridgeworks/bridgeworks.hpp"

namespace bw = bridgeworks;

namespace {

void BM_SatToCov(benchmark::State& state) {
  auto phi = bw::gen_random_sat(static_cast<std::size_t>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bw::sat_to_cov(phi));
}
BENCHMARK(BM_SatToCov)->DenseRange(4, 16, 4);

void BM_CovToOneBridge(benchmark::State& state) {
  auto cov = bw::sat_to_cov(bw::gen_random_sat(static_cast<std::size_t>(state.range(0)), 8, 1));
  for (auto _ : state) benchmark::DoNotOptimize(bw::cov_to_one_bridge(cov));
}
BENCHMARK(BM_CovToOneBridge)->DenseRange(4, 12, 4);

void BM_VerifyOneBridgeIff(benchmark::State& state) {
  auto phi = bw::gen_random_sat(static_cast<std::size_t>(state.range(0)), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bw::verify_one_bridge_iff(phi));
}
BENCHMARK(BM_VerifyOneBridgeIff)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SatToThreeSum(benchmark::State& state) {
  auto phi = bw::gen_random_sat(static_cast<std::size_t>(state.range(0)), 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bw::sat_to_threesum(phi));
}
BENCHMARK(BM_SatToThreeSum)->DenseRange(4, 16, 4);

void BM_ThreeSumBruteForce(benchmark::State& state) {
  auto inst = bw::sat_to_threesum(bw::gen_random_sat(static_cast<std::size_t>(state.range(0)), 6, 4));
  for (auto _ : state) benchmark::DoNotOptimize(bw::threesum_brute_force(inst.values));
}
BENCHMARK(BM_ThreeSumBruteForce)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_VcToRdbp(benchmark::State& state) {
  // Triangular prism.
  bw::PlanarGraph prism({{0, 0}, {20, 0}, {10, 18}, {7, 4}, {13, 4}, {10, 10}},
                        {{0, 1, {}}, {1, 2, {}}, {2, 0, {}}, {3, 4, {}}, {4, 5, {}}, {5, 3, {}},
                         {0, 3, {}}, {1, 4, {}}, {2, 5, {}}});
  for (auto _ : state) benchmark::DoNotOptimize(bw::vc_to_rdbp(prism, 4));
}
BENCHMARK(BM_VcToRdbp)->Unit(benchmark::kMillisecond);

}  // namespace
