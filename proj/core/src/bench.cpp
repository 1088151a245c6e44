#include "bridgeworks/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "bridgeworks/error.hpp"
#include "bridgeworks/optimal_bridge.hpp"
#include "bridgeworks/random.hpp"
#include "bridgeworks/twin_bridges.hpp"

namespace bridgeworks {

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("slope needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double median_ms(const std::vector<std::uint64_t>& keys, double min_ms,
                 const std::function<void(std::uint64_t)>& body) {
  using Clock = std::chrono::steady_clock;
  std::vector<double> samples;
  for (std::uint64_t key : keys) {
    std::size_t reps = 0;
    const auto start = Clock::now();
    double elapsed = 0;
    do {
      body(key);
      ++reps;
      elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    } while (elapsed < min_ms);
    samples.push_back(elapsed / static_cast<double>(reps));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  auto run = [&](const std::string& name, const std::vector<std::size_t>& sizes,
                 const std::function<void(const WeightedTree&, const WeightedTree&)>& solve) {
    std::vector<double> xs, ys;
    for (std::size_t n : sizes) {
      std::vector<TreePair> inputs;
      std::vector<std::uint64_t> index;
      for (std::uint64_t seed : config.seeds) {
        index.push_back(inputs.size());
        inputs.push_back({gen_random_tree(n, seed * 2),
                          gen_random_tree(n, seed * 2 + 1, {200, 0, 300, 100})});
      }
      double ms = median_ms(index, config.min_ms, [&](std::uint64_t i) {
        solve(inputs[i].first, inputs[i].second);
      });
      report.rows.push_back({name, n, ms});
      xs.push_back(static_cast<double>(n));
      ys.push_back(ms);
    }
    if (xs.size() >= 2) report.fits.push_back({name, loglog_slope(xs, ys)});
  };
  for (const std::string& suite : config.suites) {
    if (suite == "exact") {
      run(suite, config.bridge_sizes, [&](const WeightedTree& a, const WeightedTree& b) {
        solve_exact<double>(a, b, {config.threads});
      });
    } else if (suite == "approx") {
      run(suite, config.bridge_sizes,
          [](const WeightedTree& a, const WeightedTree& b) { approx_greedy<double>(a, b); });
    } else if (suite == "twin") {
      run(suite, config.twin_sizes, [&](const WeightedTree& a, const WeightedTree& b) {
        solve_twin<double>(a, b, {config.threads, false});
      });
    } else {
      throw InputError("unknown bench suite '" + suite + "'");
    }
  }
  return report;
}

}  // namespace bridgeworks
