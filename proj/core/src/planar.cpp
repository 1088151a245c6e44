#include "bridgeworks/planar.hpp"

namespace bridgeworks {

std::vector<std::pair<std::size_t, std::size_t>> validate_planar(const EmbeddedGraph& graph) {
  std::vector<std::pair<std::size_t, std::size_t>> crossings;
  auto edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& a = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      if (segments_intersect(graph.point(a.u), graph.point(a.v), graph.point(b.u),
                             graph.point(b.v))) {
        crossings.emplace_back(i, j);
      }
    }
  }
  return crossings;
}

}  // namespace bridgeworks
