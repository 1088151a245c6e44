#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bridgeworks/geometry.hpp"

namespace bridgeworks {

/// Edge as supplied by a caller or a file; `weight` overrides geometry.
struct EdgeSpec {
  std::size_t u = 0;
  std::size_t v = 0;
  std::optional<Rational> weight;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Length length;
  bool explicit_weight = false;
};

struct Neighbor {
  std::size_t vertex = 0;
  std::size_t edge = 0;
};

struct PointD {
  double x = 0.0;
  double y = 0.0;
};

/// Shared storage for embedded graphs: points, labelled vertices, edge list
/// and a CSR adjacency.
class EmbeddedGraph {
 public:
  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }
  const Point& point(std::size_t i) const { return points_[i]; }
  const PointD& approx_point(std::size_t i) const { return approx_[i]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::size_t max_degree() const;
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::span<const std::string> labels() const { return labels_; }
  bool has_explicit_weights() const;
  bool all_lengths_exact() const;

 protected:
  EmbeddedGraph(std::vector<Point> points, std::vector<Edge> edges,
                std::vector<std::string> labels);

  static std::vector<Edge> resolve(std::span<const Point> points,
                                   std::vector<EdgeSpec> specs);

 private:
  std::vector<Point> points_;
  std::vector<PointD> approx_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// A geometric tree. Edge lengths are Euclidean unless an explicit weight is
/// given; immutable after construction.
class WeightedTree : public EmbeddedGraph {
 public:
  /// Throws InputError unless the edges form a spanning tree.
  WeightedTree(std::vector<Point> vertices, std::vector<EdgeSpec> edges,
               std::vector<std::string> labels = {});

  /// Builds from already-resolved edge lengths (used when merging trees).
  static WeightedTree from_edges(std::vector<Point> vertices, std::vector<Edge> edges,
                                 std::vector<std::string> labels = {});

  /// Degree-1 vertex; the single vertex of a one-vertex tree also counts.
  bool is_leaf(std::size_t i) const { return size() == 1 || degree(i) == 1; }
  std::vector<std::size_t> leaves() const;

 private:
  WeightedTree(std::vector<Point> vertices, std::vector<Edge> edges,
               std::vector<std::string> labels, int);
  void validate() const;
};

/// A straight-line embedded graph with no self-loops or parallel edges.
class PlanarGraph : public EmbeddedGraph {
 public:
  PlanarGraph(std::vector<Point> vertices, std::vector<EdgeSpec> edges,
              std::vector<std::string> labels = {});

  static PlanarGraph from_edges(std::vector<Point> vertices, std::vector<Edge> edges,
                                std::vector<std::string> labels = {});

  /// Copy with additional Euclidean edges.
  PlanarGraph with_edges(std::span<const std::pair<std::size_t, std::size_t>> extra) const;

 private:
  PlanarGraph(std::vector<Point> vertices, std::vector<Edge> edges,
              std::vector<std::string> labels, int);
  void validate() const;
};

template <class T>
struct ShortestPaths {
  std::vector<T> distance;
  std::vector<bool> reached;
};

/// Single-source shortest path lengths on an arbitrary embedded graph.
template <class T>
ShortestPaths<T> dijkstra(const EmbeddedGraph& graph, std::size_t source);

}  // namespace bridgeworks
