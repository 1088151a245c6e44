#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bridgeworks/distance_table.hpp"
#include "bridgeworks/graph.hpp"

namespace bridgeworks {

/// One bridge pq between two trees, with the endpoints x, y of a longest
/// route x ~ p - q ~ y.
template <class T>
struct BridgeSolution {
  std::size_t p = 0;
  std::size_t q = 0;
  T bridge_length{};
  T value{};
  std::size_t witness_x = 0;
  std::size_t witness_y = 0;
};

struct SolveOptions {
  unsigned threads = 1;
};

/// Minimizes ecc(p) + |pq| + ecc(q) over all n1 * n2 bridges. Ties go to the
/// lexicographically smallest (p, q).
template <class T>
BridgeSolution<T> solve_exact(const WeightedTree& t1, const WeightedTree& t2,
                              SolveOptions options = {});

/// Same, reusing prebuilt distance tables.
template <class T>
BridgeSolution<T> solve_exact(const WeightedTree& t1, const DistanceTable<T>& d1,
                              const WeightedTree& t2, const DistanceTable<T>& d2,
                              SolveOptions options = {});

/// Value of a fixed bridge (p, q) with its witnesses.
template <class T>
BridgeSolution<T> evaluate_bridge(const WeightedTree& t1, const DistanceTable<T>& d1,
                                  const WeightedTree& t2, const DistanceTable<T>& d2,
                                  std::size_t p, std::size_t q);

struct DecisionWitness {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t x = 0;
  std::size_t y = 0;
};

/// Is there a bridge of length c1 and leaves x, y with
/// d(x, p) + |pq| + d(q, y) == c2? Returns the lexicographically first
/// (p, q, x, y) when so.
template <class T>
std::optional<DecisionWitness> one_bridge_decide(const WeightedTree& t1, const WeightedTree& t2,
                                                 const T& c1, const T& c2);

/// Bridges a bichromatic closest pair. Uses two traversals, no tables.
template <class T>
BridgeSolution<T> approx_greedy(const WeightedTree& t1, const WeightedTree& t2);

struct ClosestPair {
  std::size_t a = 0;
  std::size_t b = 0;
  Rational squared_distance;
};

/// Closest pair between two non-empty point sets, comparing exact squared
/// distances. Ties go to the smallest (a, b). Nearest-neighbour descent of
/// a median-split tree over b; near O(n log n) on spread-out input, including
/// two separated clusters, which send a plain strip-based divide and conquer
/// to quadratic time.
ClosestPair bichromatic_closest_pair(std::span<const Point> a, std::span<const Point> b);

struct ForestBridge {
  std::size_t tree_a = 0;
  std::size_t vertex_a = 0;
  std::size_t tree_b = 0;
  std::size_t vertex_b = 0;
};

template <class T>
struct ForestConnection {
  std::size_t hub = 0;
  std::vector<ForestBridge> bridges;
  /// Trees concatenated in input order; offsets[i] is tree i's first vertex.
  WeightedTree merged;
  std::vector<std::size_t> offsets;
  T diameter{};
};

/// Joins k >= 2 trees with k - 1 center-to-center bridges, trying every tree
/// as the hub and keeping the smallest resulting diameter.
template <class T>
ForestConnection<T> connect_forest(std::span<const WeightedTree> trees);

/// Diameter of an arbitrary tree by a double sweep.
template <class T>
T sweep_diameter(const WeightedTree& tree);

struct TreePair {
  WeightedTree first;
  WeightedTree second;
};

/// Two collinear 3-vertex paths a-b-c and d-e-f with explicit weights n on
/// every edge, |be| = 1 and |cf| = 1 - eps. The greedy bridge is (c, f).
TreePair gen_fig2_instance(long n, const Rational& eps);

}  // namespace bridgeworks
