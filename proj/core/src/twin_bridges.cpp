#include "bridgeworks/twin_bridges.hpp"

#include <algorithm>

#include "detail.hpp"

namespace bridgeworks {

BridgePair BridgePair::canonical() const {
  if (std::tie(p2, q2) < std::tie(p1, q1)) return {p2, q2, p1, q1};
  return *this;
}

void check_bridges(const WeightedTree& t1, const WeightedTree& t2, const BridgePair& b) {
  if (b.p1 >= t1.size() || b.p2 >= t1.size() || b.q1 >= t2.size() || b.q2 >= t2.size()) {
    throw InputError("bridge endpoint out of range");
  }
  if (b.p1 == b.p2 || b.q1 == b.q2) throw InputError("bridges must be vertex-disjoint");
}

bool bridges_intersect(const WeightedTree& t1, const WeightedTree& t2, const BridgePair& b) {
  return segments_intersect(t1.point(b.p1), t2.point(b.q1), t1.point(b.p2), t2.point(b.q2));
}

namespace {

template <class T>
bool greater(const T& a, const T& b) {
  return Arith<T>::less(b, a);
}

// Keeps the running maximum; ties stay with the earlier (smaller) pair.
template <class T>
void offer(std::optional<ConstrainedDiameter<T>>& best, const T& value, std::size_t a,
           std::size_t b, int dominant) {
  if (!best || greater(value, best->value)) best = ConstrainedDiameter<T>{value, a, b, dominant};
}

template <class T>
int cross_case(const T& via1, const T& via2) {
  return Arith<T>::less(via2, via1) ? 2 : 1;
}

template <class T>
bool solution_less(const TwinBridgeSolution<T>& a, const TwinBridgeSolution<T>& b) {
  if (Arith<T>::less(a.value, b.value)) return true;
  if (Arith<T>::less(b.value, a.value)) return false;
  return a.bridges < b.bridges;
}

template <class T>
TwinBridgeSolution<T> make_solution(const WeightedTree& t1, const WeightedTree& t2,
                                    const BridgePair& bridges, const ConstrainedDiameter<T>& d) {
  TwinBridgeSolution<T> s;
  s.bridges = bridges;
  s.value = d.value;
  s.dominant_case = d.dominant_case;
  s.witness_a = d.a;
  s.witness_b = d.b;
  s.intersecting = bridges_intersect(t1, t2, bridges);
  return s;
}

void require_two_vertices(const WeightedTree& t1, const WeightedTree& t2) {
  if (t1.size() < 2 || t2.size() < 2) throw InputError("twin bridges need two vertices per tree");
}

}  // namespace

template <class T>
ConstrainedDiameter<T> evaluate_constrained_diameter(const WeightedTree& t1, const WeightedTree& t2,
                                                     const BridgePair& bridges) {
  check_bridges(t1, t2, bridges);
  const std::size_t n1 = t1.size();
  const std::size_t n = n1 + t2.size();
  std::vector<Point> points(t1.points().begin(), t1.points().end());
  points.insert(points.end(), t2.points().begin(), t2.points().end());
  std::vector<Edge> edges(t1.edges().begin(), t1.edges().end());
  for (const Edge& e : t2.edges()) edges.push_back({e.u + n1, e.v + n1, e.length, e.explicit_weight});
  for (auto [p, q] : {std::pair{bridges.p1, bridges.q1}, std::pair{bridges.p2, bridges.q2}}) {
    edges.push_back({p, q + n1, euclidean_distance(t1.point(p), t2.point(q)), false});
  }
  PlanarGraph augmented = PlanarGraph::from_edges(std::move(points), std::move(edges));

  // Only the two bridge lengths are needed, so the rational backend accepts
  // trees whose unused cross distances are irrational.
  const DistanceTable<T> d1(t1);
  const DistanceTable<T> d2(t2);
  const T l1 = detail::segment_length<T>(t1, bridges.p1, t2, bridges.q1);
  const T l2 = detail::segment_length<T>(t1, bridges.p2, t2, bridges.q2);
  std::optional<ConstrainedDiameter<T>> best;
  for (std::size_t a = 0; a < n; ++a) {
    ShortestPaths<T> sp = dijkstra<T>(augmented, a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const T& d = sp.distance[b];
      if (a < n1 && b >= n1) {
        const std::size_t y = b - n1;
        int dominant = cross_case<T>(d1(a, bridges.p1) + l1 + d2(bridges.q1, y),
                                     d1(a, bridges.p2) + l2 + d2(bridges.q2, y));
        offer(best, d, a, b, dominant);
      } else if (b < n1) {
        if (Arith<T>::less(d, d1(a, b))) offer(best, d, a, b, 3);
      } else if (Arith<T>::less(d, d2(a - n1, b - n1))) {
        offer(best, d, a, b, 4);
      }
    }
  }
  return *best;
}

template <class T>
CaseFunctions<T>::CaseFunctions(const WeightedTree& t1, const WeightedTree& t2)
    : d1_(t1), d2_(t2) {
  lengths_.reserve(t1.size() * t2.size());
  for (std::size_t p = 0; p < t1.size(); ++p) {
    for (std::size_t q = 0; q < t2.size(); ++q) {
      lengths_.push_back(detail::segment_length<T>(t1, p, t2, q));
    }
  }
}

template <class T>
T CaseFunctions<T>::f1(std::size_t x, std::size_t y, const BridgePair& b) const {
  return d1_(x, b.p1) + length(b.p1, b.q1) + d2_(b.q1, y);
}

template <class T>
T CaseFunctions<T>::f2(std::size_t x, std::size_t y, const BridgePair& b) const {
  return d1_(x, b.p2) + length(b.p2, b.q2) + d2_(b.q2, y);
}

template <class T>
T CaseFunctions<T>::f(std::size_t x, std::size_t y, const BridgePair& b) const {
  T a = f1(x, y, b);
  T c = f2(x, y, b);
  return Arith<T>::less(c, a) ? c : a;
}

template <class T>
T CaseFunctions<T>::g(const BridgePair& b) const {
  return d1_(b.p1, b.p2) - (length(b.p1, b.q1) + d2_(b.q1, b.q2) + length(b.p2, b.q2));
}

template <class T>
T CaseFunctions<T>::g_second(const BridgePair& b) const {
  return d2_(b.q1, b.q2) - (length(b.p1, b.q1) + d1_(b.p1, b.p2) + length(b.p2, b.q2));
}

template <class T>
ConstrainedDiameter<T> CaseFunctions<T>::score(const BridgePair& b) const {
  const std::size_t n1 = size1();
  const std::size_t n2 = size2();
  const T& l1 = length(b.p1, b.q1);
  const T& l2 = length(b.p2, b.q2);
  std::optional<ConstrainedDiameter<T>> best;

  // Same-tree pairs in T1 may cut through T2 along the cycle.
  const T loop1 = l1 + d2_(b.q1, b.q2) + l2;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t c = a + 1; c < n1; ++c) {
      T r1 = d1_(a, b.p1) + loop1 + d1_(b.p2, c);
      T r2 = d1_(a, b.p2) + loop1 + d1_(b.p1, c);
      const T& route = Arith<T>::less(r2, r1) ? r2 : r1;
      if (Arith<T>::less(route, d1_(a, c))) offer(best, route, a, c, 3);
    }
    for (std::size_t y = 0; y < n2; ++y) {
      T via1 = d1_(a, b.p1) + l1 + d2_(b.q1, y);
      T via2 = d1_(a, b.p2) + l2 + d2_(b.q2, y);
      int dominant = cross_case(via1, via2);
      offer(best, dominant == 1 ? via1 : via2, a, n1 + y, dominant);
    }
  }
  const T loop2 = l1 + d1_(b.p1, b.p2) + l2;
  for (std::size_t y = 0; y < n2; ++y) {
    for (std::size_t w = y + 1; w < n2; ++w) {
      T r1 = d2_(y, b.q1) + loop2 + d2_(b.q2, w);
      T r2 = d2_(y, b.q2) + loop2 + d2_(b.q1, w);
      const T& route = Arith<T>::less(r2, r1) ? r2 : r1;
      if (Arith<T>::less(route, d2_(y, w))) offer(best, route, n1 + y, n1 + w, 4);
    }
  }
  return *best;
}

namespace {

// Component of `tree` minus edge `cut` that contains the edge's u endpoint.
std::vector<bool> side_of(const WeightedTree& tree, std::size_t cut) {
  std::vector<bool> in(tree.size(), false);
  std::vector<std::size_t> stack{tree.edges()[cut].u};
  in[stack.back()] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : tree.neighbors(u)) {
      if (nb.edge == cut || in[nb.vertex]) continue;
      in[nb.vertex] = true;
      stack.push_back(nb.vertex);
    }
  }
  return in;
}

// For every edge: the split and each vertex's eccentricity within its part.
template <class T>
struct EdgeSplits {
  std::vector<std::vector<bool>> side;
  std::vector<std::vector<T>> eccentricity;

  EdgeSplits(const WeightedTree& tree, const DistanceTable<T>& d) {
    const std::size_t n = tree.size();
    for (std::size_t e = 0; e < tree.edges().size(); ++e) {
      std::vector<bool> in = side_of(tree, e);
      std::vector<T> ecc(n, Arith<T>::zero());
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t x = 0; x < n; ++x) {
          if (in[x] == in[v] && Arith<T>::less(ecc[v], d(v, x))) ecc[v] = d(v, x);
        }
      }
      side.push_back(std::move(in));
      eccentricity.push_back(std::move(ecc));
    }
  }
};

}  // namespace

template <class T>
TwinBridgeSolution<T> solve_cases_12(const WeightedTree& t1, const WeightedTree& t2,
                                     TwinOptions options) {
  require_two_vertices(t1, t2);
  const CaseFunctions<T> cases(t1, t2);
  const EdgeSplits<T> split1(t1, cases.table1());
  const EdgeSplits<T> split2(t2, cases.table2());
  const std::size_t m2 = t2.edges().size();

  // Optimal bridge between part s1 of T1 - e1 and part s2 of T2 - e2.
  auto sub_bridge = [&](std::size_t e1, bool s1, std::size_t e2, bool s2) {
    std::optional<std::pair<std::size_t, std::size_t>> arg;
    T best{};
    for (std::size_t p = 0; p < t1.size(); ++p) {
      if (split1.side[e1][p] != s1) continue;
      for (std::size_t q = 0; q < t2.size(); ++q) {
        if (split2.side[e2][q] != s2) continue;
        T value = split1.eccentricity[e1][p] + cases.length(p, q) + split2.eccentricity[e2][q];
        if (!arg || Arith<T>::less(value, best)) {
          arg = {p, q};
          best = std::move(value);
        }
      }
    }
    return *arg;
  };

  auto scan = [&](std::size_t begin, std::size_t end) {
    std::optional<TwinBridgeSolution<T>> best;
    for (std::size_t e1 = begin; e1 < end; ++e1) {
      for (std::size_t e2 = 0; e2 < m2; ++e2) {
        for (bool crossed : {false, true}) {
          auto [p1, q1] = sub_bridge(e1, true, e2, !crossed);
          auto [p2, q2] = sub_bridge(e1, false, e2, crossed);
          BridgePair bridges = BridgePair{p1, q1, p2, q2}.canonical();
          TwinBridgeSolution<T> candidate = make_solution(t1, t2, bridges, cases.score(bridges));
          candidate.deleted_edges = std::pair{e1, e2};
          if (!best || solution_less(candidate, *best)) best = std::move(candidate);
        }
      }
    }
    return best;
  };
  return *detail::parallel_min<TwinBridgeSolution<T>>(t1.edges().size(), options.threads, scan,
                                                      solution_less<T>);
}

template <class T>
TwinBridgeSolution<T> solve_cases_34(const WeightedTree& t1, const WeightedTree& t2,
                                     TwinOptions) {
  require_two_vertices(t1, t2);
  const CaseFunctions<T> cases(t1, t2);

  // Case 3: p1, p2 on T1's diameter path, q1 != q2 anywhere in T2.
  auto best_g = [&](bool first) {
    const DistanceTable<T>& d = first ? cases.table1() : cases.table2();
    const WeightedTree& path_tree = first ? t1 : t2;
    const std::size_t other = first ? t2.size() : t1.size();
    std::vector<std::size_t> path = tree_path(path_tree, d.diameter().x, d.diameter().z);
    std::optional<BridgePair> arg;
    T best{};
    for (std::size_t u : path) {
      for (std::size_t v : path) {
        if (u == v) continue;
        for (std::size_t s = 0; s < other; ++s) {
          for (std::size_t t = 0; t < other; ++t) {
            if (s == t) continue;
            BridgePair b = first ? BridgePair{u, s, v, t} : BridgePair{s, u, t, v};
            b = b.canonical();
            T value = first ? cases.g(b) : cases.g_second(b);
            if (!arg || greater(value, best) || (Arith<T>::equal(value, best) && b < *arg)) {
              arg = b;
              best = std::move(value);
            }
          }
        }
      }
    }
    return make_solution(t1, t2, *arg, cases.score(*arg));
  };
  TwinBridgeSolution<T> third = best_g(true);
  TwinBridgeSolution<T> fourth = best_g(false);
  return solution_less(fourth, third) ? fourth : third;
}

template <class T>
TwinBridgeSolution<T> solve_twin(const WeightedTree& t1, const WeightedTree& t2,
                                 TwinOptions options) {
  TwinBridgeSolution<T> best;
  bool have = false;
  for (TwinBridgeSolution<T> candidate :
       {solve_cases_12<T>(t1, t2, options), solve_cases_34<T>(t1, t2, options)}) {
    ConstrainedDiameter<T> rescored = evaluate_constrained_diameter<T>(t1, t2, candidate.bridges);
    candidate.value = rescored.value;
    candidate.dominant_case = rescored.dominant_case;
    candidate.witness_a = rescored.a;
    candidate.witness_b = rescored.b;
    if (!have || solution_less(candidate, best)) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

template <class T>
TwinBridgeSolution<T> brute_force_twin(const WeightedTree& t1, const WeightedTree& t2,
                                       TwinOptions options) {
  require_two_vertices(t1, t2);
  if (!options.force && t1.size() * t2.size() > 400) {
    throw InputError("brute force limited to n1 * n2 <= 400 (use --force)");
  }
  const CaseFunctions<T> cases(t1, t2);
  const std::size_t n1 = t1.size();
  const std::size_t n2 = t2.size();
  auto scan = [&](std::size_t begin, std::size_t end) {
    std::optional<TwinBridgeSolution<T>> best;
    for (std::size_t p1 = begin; p1 < end; ++p1) {
      for (std::size_t q1 = 0; q1 < n2; ++q1) {
        for (std::size_t p2 = p1 + 1; p2 < n1; ++p2) {
          for (std::size_t q2 = 0; q2 < n2; ++q2) {
            if (q1 == q2) continue;
            BridgePair b{p1, q1, p2, q2};
            ConstrainedDiameter<T> d = cases.score(b);
            if (best && !Arith<T>::less(d.value, best->value)) continue;
            best = make_solution(t1, t2, b, d);
          }
        }
      }
    }
    return best;
  };
  TwinBridgeSolution<T> best =
      *detail::parallel_min<TwinBridgeSolution<T>>(n1, options.threads, scan, solution_less<T>);
  return make_solution(t1, t2, best.bridges,
                       evaluate_constrained_diameter<T>(t1, t2, best.bridges));
}

TreePair gen_fig3_instance(const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 10)) throw InputError("fig3 needs 0 < eps <= 1/10");
  const Point a{Rational(9, 10), Rational(-6, 5)};
  const Point b{Rational(0), Rational(0)};
  const Point c{Rational(1), Rational(0)};
  const Point d{Rational(1, 5), Rational(6, 5)};
  const Point x{a.x, a.y - eps};
  const Point y{b.x - eps, b.y};
  const Point z{c.x + eps, c.y};
  const Point w{d.x, d.y + eps};
  std::vector<EdgeSpec> path{{0, 1, std::nullopt}, {1, 2, std::nullopt}, {2, 3, std::nullopt}};
  WeightedTree t1({x, a, b, y}, path, {"x", "a", "b", "y"});
  WeightedTree t2({z, c, d, w}, path, {"z", "c", "d", "w"});
  return {std::move(t1), std::move(t2)};
}

#define BRIDGEWORKS_INSTANTIATE(T)                                                         \
  template class CaseFunctions<T>;                                                         \
  template ConstrainedDiameter<T> evaluate_constrained_diameter<T>(                        \
      const WeightedTree&, const WeightedTree&, const BridgePair&);                        \
  template TwinBridgeSolution<T> solve_cases_12<T>(const WeightedTree&, const WeightedTree&, \
                                                   TwinOptions);                           \
  template TwinBridgeSolution<T> solve_cases_34<T>(const WeightedTree&, const WeightedTree&, \
                                                   TwinOptions);                           \
  template TwinBridgeSolution<T> solve_twin<T>(const WeightedTree&, const WeightedTree&,   \
                                               TwinOptions);                               \
  template TwinBridgeSolution<T> brute_force_twin<T>(const WeightedTree&,                  \
                                                     const WeightedTree&, TwinOptions);

BRIDGEWORKS_INSTANTIATE(Rational)
BRIDGEWORKS_INSTANTIATE(double)

#undef BRIDGEWORKS_INSTANTIATE

}  // namespace bridgeworks
