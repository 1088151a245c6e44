#pragma once

// Internal helpers shared by the solvers. Not installed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

#include "bridgeworks/graph.hpp"

namespace bridgeworks::detail {

/// Length of the segment between vertex i of `a` and vertex j of `b`.
template <class T>
T segment_length(const EmbeddedGraph& a, std::size_t i, const EmbeddedGraph& b, std::size_t j);

template <>
inline Rational segment_length<Rational>(const EmbeddedGraph& a, std::size_t i,
                                         const EmbeddedGraph& b, std::size_t j) {
  return euclidean_distance(a.point(i), b.point(j)).rational();
}

template <>
inline double segment_length<double>(const EmbeddedGraph& a, std::size_t i,
                                     const EmbeddedGraph& b, std::size_t j) {
  const PointD& p = a.approx_point(i);
  const PointD& q = b.approx_point(j);
  // Axis-aligned segments stay exact in double as well.
  if (a.point(i).x == b.point(j).x) return std::abs(p.y - q.y);
  if (a.point(i).y == b.point(j).y) return std::abs(p.x - q.x);
  return std::hypot(p.x - q.x, p.y - q.y);
}

/// Row-major n1 x n2 matrix of cross-tree segment lengths.
template <class T>
class CrossLengths {
 public:
  CrossLengths(const EmbeddedGraph& a, const EmbeddedGraph& b) : cols_(b.size()) {
    data_.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) data_.push_back(segment_length<T>(a, i, b, j));
    }
  }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t cols_;
  std::vector<T> data_;
};

/// Splits [0, count) into contiguous chunks, runs `body(begin, end)` on each
/// (possibly on worker threads) and reduces the per-chunk optima in chunk
/// order. With a strict total order `less`, the result does not depend on the
/// thread count.
template <class Result, class Body, class Less>
std::optional<Result> parallel_min(std::size_t count, unsigned threads, Body body, Less less) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::optional<Result>> partial(threads);
  if (threads == 1) {
    partial[0] = body(std::size_t{0}, count);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = count * t / threads;
      std::size_t end = count * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] { partial[t] = body(begin, end); });
    }
    for (std::thread& w : workers) w.join();
  }
  std::optional<Result> best;
  for (auto& candidate : partial) {
    if (candidate && (!best || less(*candidate, *best))) best = std::move(candidate);
  }
  return best;
}

}  // namespace bridgeworks::detail
