#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bridgeworks {

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0;  // vertices per tree
  double median_ms = 0.0;
};

struct BenchFit {
  std::string algorithm;
  double exponent = 0.0;  // slope of log(time) against log(n)
};

struct BenchConfig {
  std::vector<std::string> suites{"exact", "approx", "twin"};
  std::vector<std::size_t> bridge_sizes{100, 200, 400, 800};
  std::vector<std::size_t> twin_sizes{10, 20, 30, 40};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  unsigned threads = 1;
  /// Each measurement repeats until at least this much time has passed.
  double min_ms = 20.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchFit> fits;
};

/// Times solve_exact, approx_greedy and solve_twin (double backend) on
/// random tree pairs and fits a growth exponent per algorithm.
BenchReport run_bench(const BenchConfig& config);

/// Least-squares slope of log(y) on log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Median over `keys` of the mean wall time (ms) of `body(key)`.
double median_ms(const std::vector<std::uint64_t>& keys, double min_ms,
                 const std::function<void(std::uint64_t)>& body);

}  // namespace bridgeworks
