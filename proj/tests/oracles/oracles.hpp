#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond its data types.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bridgeworks/graph.hpp"
#include "bridgeworks/reductions/sat.hpp"

namespace oracle {

using bridgeworks::Rational;

/// Simple O(n^2) Dijkstra over an edge list.
template <class T>
struct WeightedEdge {
  std::size_t u;
  std::size_t v;
  T w;
};

template <class T>
std::vector<T> shortest_paths(std::size_t n, const std::vector<WeightedEdge<T>>& edges,
                              std::size_t source);

/// Edge list of a graph with lengths in backend T.
template <class T>
std::vector<WeightedEdge<T>> edge_list(const bridgeworks::EmbeddedGraph& g, std::size_t offset = 0);

/// Longest cross-tree shortest path in T1 + T2 + {pq}.
template <class T>
T bridge_value(const bridgeworks::WeightedTree& t1, const bridgeworks::WeightedTree& t2,
               std::size_t p, std::size_t q);

/// Length of pq in backend T.
template <class T>
T length(const bridgeworks::Point& p, const bridgeworks::Point& q);

struct PairResult {
  std::size_t a;
  std::size_t b;
  Rational d2;
};

PairResult closest_pair_quadratic(std::span<const bridgeworks::Point> a,
                                  std::span<const bridgeworks::Point> b);

/// Minimum diameter over every spanning topology of the trees and every
/// choice of bridge endpoints (double arithmetic).
double forest_optimum(std::span<const bridgeworks::WeightedTree> trees);

/// Backtracking one-in-three SAT decision.
bool one_in_three_satisfiable(const bridgeworks::OneInThreeSat& phi);

/// Entry of the complementary-vector encoding computed from a full list of
/// truth values for the part's variables (nullopt = variable not in part).
std::uint8_t cov_entry(const std::array<int, 3>& clause,
                       const std::vector<std::optional<bool>>& values);

/// Minimum vertex cover size via maximum independent set on bitmasks.
std::size_t min_vertex_cover(const bridgeworks::EmbeddedGraph& g);

}  // namespace oracle
