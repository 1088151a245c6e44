#include "bridgeworks/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace bridgeworks {

namespace {

// GMP comparisons assume canonical fractions; callers may pass raw ones.
Point canonical(Point p) {
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<Point> points, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : points_(std::move(points)), edges_(std::move(edges)), labels_(std::move(labels)) {
  for (Point& p : points_) p = canonical(std::move(p));
  const std::size_t n = points_.size();
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match vertex count " + std::to_string(n));
  }
  approx_.reserve(n);
  for (const Point& p : points_) approx_.push_back({p.x.get_d(), p.y.get_d()});

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge endpoint out of range (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.u]++] = {e.v, id};
    adjacency_[cursor[e.v]++] = {e.u, id};
  }
}

std::vector<Edge> EmbeddedGraph::resolve(std::span<const Point> points,
                                         std::vector<EdgeSpec> specs) {
  std::vector<Edge> edges;
  edges.reserve(specs.size());
  for (EdgeSpec& spec : specs) {
    if (spec.u >= points.size() || spec.v >= points.size()) {
      throw InputError("edge endpoint out of range (" + std::to_string(spec.u) + ", " +
                       std::to_string(spec.v) + ")");
    }
    Edge edge{spec.u, spec.v, {}, spec.weight.has_value()};
    if (spec.weight) {
      spec.weight->canonicalize();
      edge.length = Length::exact(std::move(*spec.weight));
    } else {
      edge.length = euclidean_distance(canonical(points[spec.u]), canonical(points[spec.v]));
    }
    edges.push_back(std::move(edge));
  }
  return edges;
}

std::size_t EmbeddedGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < size(); ++i) best = std::max(best, degree(i));
  return best;
}

bool EmbeddedGraph::has_explicit_weights() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.explicit_weight; });
}

bool EmbeddedGraph::all_lengths_exact() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.length.is_exact(); });
}

// ---------------------------------------------------------------------------

WeightedTree::WeightedTree(std::vector<Point> vertices, std::vector<EdgeSpec> edges,
                           std::vector<std::string> labels)
    : WeightedTree(vertices, resolve(vertices, std::move(edges)), std::move(labels), 0) {}

WeightedTree::WeightedTree(std::vector<Point> vertices, std::vector<Edge> edges,
                           std::vector<std::string> labels, int)
    : EmbeddedGraph(std::move(vertices), std::move(edges), std::move(labels)) {
  validate();
}

WeightedTree WeightedTree::from_edges(std::vector<Point> vertices, std::vector<Edge> edges,
                                      std::vector<std::string> labels) {
  return WeightedTree(std::move(vertices), std::move(edges), std::move(labels), 0);
}

void WeightedTree::validate() const {
  const std::size_t n = size();
  if (n == 0) throw InputError("not a tree: no vertices");
  if (edges().size() != n - 1) {
    throw InputError("not a tree: " + std::to_string(n) + " vertices need " +
                     std::to_string(n - 1) + " edges, got " +
                     std::to_string(edges().size()));
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : neighbors(u)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++visited;
        stack.push_back(nb.vertex);
      }
    }
  }
  // n - 1 edges and connected implies acyclic.
  if (visited != n) throw InputError("not a tree: edge set is disconnected or cyclic");
}

std::vector<std::size_t> WeightedTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_leaf(i)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

PlanarGraph::PlanarGraph(std::vector<Point> vertices, std::vector<EdgeSpec> edges,
                         std::vector<std::string> labels)
    : PlanarGraph(vertices, resolve(vertices, std::move(edges)), std::move(labels), 0) {}

PlanarGraph::PlanarGraph(std::vector<Point> vertices, std::vector<Edge> edges,
                         std::vector<std::string> labels, int)
    : EmbeddedGraph(std::move(vertices), std::move(edges), std::move(labels)) {
  validate();
}

PlanarGraph PlanarGraph::from_edges(std::vector<Point> vertices, std::vector<Edge> edges,
                                    std::vector<std::string> labels) {
  return PlanarGraph(std::move(vertices), std::move(edges), std::move(labels), 0);
}

void PlanarGraph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges()) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + label(e.u));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      throw InputError("duplicate edge " + label(e.u) + " - " + label(e.v));
    }
  }
}

PlanarGraph PlanarGraph::with_edges(
    std::span<const std::pair<std::size_t, std::size_t>> extra) const {
  std::vector<Point> points(this->points().begin(), this->points().end());
  std::vector<Edge> edges(this->edges().begin(), this->edges().end());
  for (auto [u, v] : extra) {
    if (u >= size() || v >= size()) throw InputError("extra edge endpoint out of range");
    edges.push_back({u, v, euclidean_distance(point(u), point(v)), false});
  }
  std::vector<std::string> labels(this->labels().begin(), this->labels().end());
  return from_edges(std::move(points), std::move(edges), std::move(labels));
}

// ---------------------------------------------------------------------------

template <class T>
ShortestPaths<T> dijkstra(const EmbeddedGraph& graph, std::size_t source) {
  const std::size_t n = graph.size();
  ShortestPaths<T> out{std::vector<T>(n, Arith<T>::zero()), std::vector<bool>(n, false)};
  std::vector<bool> done(n, false);
  std::vector<T> lengths;
  lengths.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) lengths.push_back(e.length.as<T>());

  using Entry = std::pair<T, std::size_t>;
  auto greater = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return b.first < a.first;
    return b.second < a.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> queue(greater);
  out.reached[source] = true;
  queue.push({Arith<T>::zero(), source});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const Neighbor& nb : graph.neighbors(u)) {
      T candidate = d + lengths[nb.edge];
      if (!out.reached[nb.vertex] || candidate < out.distance[nb.vertex]) {
        out.reached[nb.vertex] = true;
        out.distance[nb.vertex] = candidate;
        queue.push({candidate, nb.vertex});
      }
    }
  }
  return out;
}

template ShortestPaths<Rational> dijkstra<Rational>(const EmbeddedGraph&, std::size_t);
template ShortestPaths<double> dijkstra<double>(const EmbeddedGraph&, std::size_t);

}  // namespace bridgeworks
