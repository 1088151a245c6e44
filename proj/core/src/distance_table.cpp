#include "bridgeworks/distance_table.hpp"

#include <algorithm>

namespace bridgeworks {

template <class T>
SingleSource<T> single_source(const WeightedTree& tree, std::size_t source) {
  const std::size_t n = tree.size();
  if (source >= n) throw InputError("source vertex out of range");
  SingleSource<T> out{source, std::vector<T>(n, Arith<T>::zero()),
                      std::vector<std::size_t>(n, n), source};
  out.parent[source] = source;
  std::vector<std::size_t> stack{source};
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : tree.neighbors(u)) {
      if (out.parent[nb.vertex] != n) continue;
      out.parent[nb.vertex] = u;
      out.distance[nb.vertex] = out.distance[u] + tree.edges()[nb.edge].length.template as<T>();
      stack.push_back(nb.vertex);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (Arith<T>::less(out.distance[out.farthest], out.distance[v])) out.farthest = v;
  }
  return out;
}

template <class T>
DistanceTable<T>::DistanceTable(const WeightedTree& tree)
    : n_(tree.size()), eccentricity_(n_, Arith<T>::zero()), farthest_(n_, 0) {
  table_.reserve(n_ * n_);
  for (std::size_t u = 0; u < n_; ++u) {
    SingleSource<T> row = single_source<T>(tree, u);
    eccentricity_[u] = row.distance[row.farthest];
    farthest_[u] = row.farthest;
    for (T& d : row.distance) table_.push_back(std::move(d));
  }
  diameter_ = {0, 0, Arith<T>::zero()};
  if (n_ == 1) return;
  bool found = false;
  for (std::size_t x = 0; x < n_; ++x) {
    if (!tree.is_leaf(x)) continue;
    for (std::size_t z = x + 1; z < n_; ++z) {
      if (!tree.is_leaf(z)) continue;
      if (!found || Arith<T>::less(diameter_.length, (*this)(x, z))) {
        diameter_ = {x, z, (*this)(x, z)};
        found = true;
      }
    }
  }
}

template <class T>
std::size_t DistanceTable<T>::center() const {
  std::size_t best = 0;
  for (std::size_t u = 1; u < n_; ++u) {
    if (Arith<T>::less(eccentricity_[u], eccentricity_[best])) best = u;
  }
  return best;
}

template <class T>
TreeDiameter<T> tree_diameter(const WeightedTree& tree) {
  return DistanceTable<T>(tree).diameter();
}

std::vector<std::size_t> tree_path(const WeightedTree& tree, std::size_t u, std::size_t v) {
  SingleSource<double> from_v = single_source<double>(tree, v);
  std::vector<std::size_t> path{u};
  while (path.back() != v) path.push_back(from_v.parent[path.back()]);
  return path;
}

template class DistanceTable<Rational>;
template class DistanceTable<double>;
template SingleSource<Rational> single_source<Rational>(const WeightedTree&, std::size_t);
template SingleSource<double> single_source<double>(const WeightedTree&, std::size_t);
template TreeDiameter<Rational> tree_diameter<Rational>(const WeightedTree&);
template TreeDiameter<double> tree_diameter<double>(const WeightedTree&);

}  // namespace bridgeworks
