#include <optional>

#include "bridgeworks/optimal_bridge.hpp"

namespace bridgeworks {

template <class T>
T sweep_diameter(const WeightedTree& tree) {
  SingleSource<T> first = single_source<T>(tree, 0);
  SingleSource<T> second = single_source<T>(tree, first.farthest);
  return second.distance[second.farthest];
}

template <class T>
ForestConnection<T> connect_forest(std::span<const WeightedTree> trees) {
  if (trees.size() < 2) throw InputError("connect_forest needs at least two trees");
  std::vector<std::size_t> centers;
  std::vector<std::size_t> offsets;
  std::vector<Point> points;
  std::vector<Edge> base_edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const WeightedTree& t = trees[i];
    const std::size_t offset = points.size();
    offsets.push_back(offset);
    centers.push_back(DistanceTable<T>(t).center());
    for (std::size_t v = 0; v < t.size(); ++v) {
      points.push_back(t.point(v));
      labels.push_back("t" + std::to_string(i) + ":" + t.label(v));
    }
    for (const Edge& e : t.edges()) {
      base_edges.push_back({e.u + offset, e.v + offset, e.length, e.explicit_weight});
    }
  }

  std::optional<ForestConnection<T>> best;
  for (std::size_t hub = 0; hub < trees.size(); ++hub) {
    std::vector<ForestBridge> bridges;
    std::vector<Edge> edges = base_edges;
    const std::size_t h = offsets[hub] + centers[hub];
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (i == hub) continue;
      const std::size_t c = offsets[i] + centers[i];
      bridges.push_back({hub, centers[hub], i, centers[i]});
      edges.push_back({h, c, euclidean_distance(points[h], points[c]), false});
    }
    WeightedTree merged = WeightedTree::from_edges(points, std::move(edges), labels);
    T diameter = sweep_diameter<T>(merged);
    if (!best || Arith<T>::less(diameter, best->diameter)) {
      best.emplace(ForestConnection<T>{hub, std::move(bridges), std::move(merged), offsets,
                                       std::move(diameter)});
    }
  }
  return std::move(*best);
}

template Rational sweep_diameter<Rational>(const WeightedTree&);
template double sweep_diameter<double>(const WeightedTree&);
template ForestConnection<Rational> connect_forest<Rational>(std::span<const WeightedTree>);
template ForestConnection<double> connect_forest<double>(std::span<const WeightedTree>);

}  // namespace bridgeworks
