#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bridgeworks/graph.hpp"

namespace bridgeworks {

template <class T>
struct TreeDiameter {
  std::size_t x = 0;
  std::size_t z = 0;
  T length{};
};

/// Path lengths and parents from one source, computed by a tree traversal.
template <class T>
struct SingleSource {
  std::size_t source = 0;
  std::vector<T> distance;
  std::vector<std::size_t> parent;  // parent[source] == source
  std::size_t farthest = 0;         // smallest index among maximizers
};

template <class T>
SingleSource<T> single_source(const WeightedTree& tree, std::size_t source);

/// All-pairs tree distances with per-vertex eccentricities.
///
/// Rows are produced by one O(n) traversal per source, so building costs
/// O(n^2) time and memory. Ties among farthest vertices and diameter leaf
/// pairs resolve to the smallest vertex indices.
template <class T>
class DistanceTable {
 public:
  explicit DistanceTable(const WeightedTree& tree);

  std::size_t size() const { return n_; }
  const T& operator()(std::size_t u, std::size_t v) const { return table_[u * n_ + v]; }
  std::span<const T> row(std::size_t u) const { return {table_.data() + u * n_, n_}; }
  const T& eccentricity(std::size_t u) const { return eccentricity_[u]; }
  std::span<const T> eccentricities() const { return eccentricity_; }
  /// Smallest-index vertex realizing eccentricity(u).
  std::size_t farthest(std::size_t u) const { return farthest_[u]; }
  const TreeDiameter<T>& diameter() const { return diameter_; }
  /// Smallest-index vertex of minimum eccentricity.
  std::size_t center() const;

 private:
  std::size_t n_;
  std::vector<T> table_;
  std::vector<T> eccentricity_;
  std::vector<std::size_t> farthest_;
  TreeDiameter<T> diameter_;
};

template <class T>
DistanceTable<T> build_distance_table(const WeightedTree& tree) {
  return DistanceTable<T>(tree);
}

/// Maximizing leaf pair (x < z unless the tree has one vertex), ties broken
/// lexicographically by (x, z).
template <class T>
TreeDiameter<T> tree_diameter(const WeightedTree& tree);

/// Vertices of the unique u-v path, from u to v.
std::vector<std::size_t> tree_path(const WeightedTree& tree, std::size_t u, std::size_t v);

}  // namespace bridgeworks
