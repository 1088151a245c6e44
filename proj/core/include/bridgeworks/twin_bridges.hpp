#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bridgeworks/distance_table.hpp"
#include "bridgeworks/graph.hpp"
#include "bridgeworks/optimal_bridge.hpp"

namespace bridgeworks {

/// Two vertex-disjoint bridges (p1, q1) and (p2, q2), p in T1 and q in T2.
struct BridgePair {
  std::size_t p1 = 0;
  std::size_t q1 = 0;
  std::size_t p2 = 0;
  std::size_t q2 = 0;

  /// Orders the bridges so that (p1, q1) < (p2, q2).
  BridgePair canonical() const;

  friend bool operator==(const BridgePair&, const BridgePair&) = default;
  friend auto operator<=>(const BridgePair&, const BridgePair&) = default;
};

/// Longest qualifying shortest path of T1 + T2 + both bridges.
///
/// Vertices are numbered globally: T1 keeps its indices, T2 vertex v becomes
/// n1 + v. The witness is the smallest (a, b), a < b, attaining the value.
template <class T>
struct ConstrainedDiameter {
  T value{};
  std::size_t a = 0;
  std::size_t b = 0;
  /// 1 or 2: a cross pair routed through bridge 1 or 2 (1 on ties);
  /// 3: a T1 pair; 4: a T2 pair.
  int dominant_case = 1;
};

template <class T>
struct TwinBridgeSolution {
  BridgePair bridges;
  T value{};
  int dominant_case = 1;
  std::size_t witness_a = 0;
  std::size_t witness_b = 0;
  bool intersecting = false;
  /// Edges of T1 and T2 removed to produce the candidate (edge-pair solver).
  std::optional<std::pair<std::size_t, std::size_t>> deleted_edges;
};

/// Throws InputError unless the bridges are in range and vertex-disjoint.
void check_bridges(const WeightedTree& t1, const WeightedTree& t2, const BridgePair& bridges);

/// Builds T'' explicitly and runs Dijkstra from every vertex. A same-tree
/// pair qualifies only when its T'' distance is strictly below its tree
/// distance.
template <class T>
ConstrainedDiameter<T> evaluate_constrained_diameter(const WeightedTree& t1, const WeightedTree& t2,
                                                     const BridgePair& bridges);

/// Tree tables plus cross lengths, with the routing functions over them.
/// Distances inside a component of T - e equal T's own distances, so f1 and
/// f2 read the full tables.
template <class T>
class CaseFunctions {
 public:
  CaseFunctions(const WeightedTree& t1, const WeightedTree& t2);

  std::size_t size1() const { return d1_.size(); }
  std::size_t size2() const { return d2_.size(); }
  const DistanceTable<T>& table1() const { return d1_; }
  const DistanceTable<T>& table2() const { return d2_; }
  const T& length(std::size_t p, std::size_t q) const { return lengths_[p * size2() + q]; }

  /// x in T1 to y in T2 through (p1, q1).
  T f1(std::size_t x, std::size_t y, const BridgePair& b) const;
  /// x in T1 to y in T2 through (p2, q2).
  T f2(std::size_t x, std::size_t y, const BridgePair& b) const;
  T f(std::size_t x, std::size_t y, const BridgePair& b) const;
  /// d1(p1, p2) - (|p1 q1| + d2(q1, q2) + |q2 p2|).
  T g(const BridgePair& b) const;
  /// The same with the roles of T1 and T2 swapped.
  T g_second(const BridgePair& b) const;

  /// Closed-form constrained diameter; agrees with
  /// evaluate_constrained_diameter in O((n1 + n2)^2).
  ConstrainedDiameter<T> score(const BridgePair& b) const;

 private:
  DistanceTable<T> d1_;
  DistanceTable<T> d2_;
  std::vector<T> lengths_;
};

struct TwinOptions {
  unsigned threads = 1;
  bool force = false;  // lift the brute-force size guard
};

/// Edge-pair deletion, both pairings, two optimal sub-bridges each.
template <class T>
TwinBridgeSolution<T> solve_cases_12(const WeightedTree& t1, const WeightedTree& t2,
                                     TwinOptions options = {});

/// Maximizes g with p1, p2 on T1's diameter path (and symmetrically for T2).
template <class T>
TwinBridgeSolution<T> solve_cases_34(const WeightedTree& t1, const WeightedTree& t2,
                                     TwinOptions options = {});

/// Best of the two case solvers, re-scored by evaluate_constrained_diameter.
template <class T>
TwinBridgeSolution<T> solve_twin(const WeightedTree& t1, const WeightedTree& t2,
                                 TwinOptions options = {});

/// Every vertex-disjoint bridge pair. Refuses n1 * n2 > 400 unless forced.
template <class T>
TwinBridgeSolution<T> brute_force_twin(const WeightedTree& t1, const WeightedTree& t2,
                                       TwinOptions options = {});

/// True if the two bridge segments share a point.
bool bridges_intersect(const WeightedTree& t1, const WeightedTree& t2, const BridgePair& b);

/// Paths T1 = (x, a, b, y) and T2 = (z, c, d, w) with pendant edges of length
/// eps, arranged so that the best pair of bridges is (b, c), (a, d) and the
/// two segments cross. Requires 0 < eps <= 1/10.
TreePair gen_fig3_instance(const Rational& eps);

}  // namespace bridgeworks
