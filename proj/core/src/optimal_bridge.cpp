#include "bridgeworks/optimal_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "detail.hpp"

namespace bridgeworks {

template <class T>
BridgeSolution<T> evaluate_bridge(const WeightedTree& t1, const DistanceTable<T>& d1,
                                  const WeightedTree& t2, const DistanceTable<T>& d2,
                                  std::size_t p, std::size_t q) {
  BridgeSolution<T> s;
  s.p = p;
  s.q = q;
  s.bridge_length = detail::segment_length<T>(t1, p, t2, q);
  s.value = d1.eccentricity(p) + s.bridge_length + d2.eccentricity(q);
  s.witness_x = d1.farthest(p);
  s.witness_y = d2.farthest(q);
  return s;
}

template <class T>
BridgeSolution<T> solve_exact(const WeightedTree& t1, const DistanceTable<T>& d1,
                              const WeightedTree& t2, const DistanceTable<T>& d2,
                              SolveOptions options) {
  const std::size_t n2 = t2.size();
  auto scan = [&](std::size_t begin, std::size_t end) {
    std::optional<BridgeSolution<T>> best;
    for (std::size_t p = begin; p < end; ++p) {
      for (std::size_t q = 0; q < n2; ++q) {
        T value = d1.eccentricity(p) + detail::segment_length<T>(t1, p, t2, q) + d2.eccentricity(q);
        if (!best || Arith<T>::less(value, best->value)) {
          best = evaluate_bridge(t1, d1, t2, d2, p, q);
        }
      }
    }
    return best;
  };
  auto less = [](const BridgeSolution<T>& a, const BridgeSolution<T>& b) {
    if (Arith<T>::less(a.value, b.value)) return true;
    if (Arith<T>::less(b.value, a.value)) return false;
    return std::tie(a.p, a.q) < std::tie(b.p, b.q);
  };
  return *detail::parallel_min<BridgeSolution<T>>(t1.size(), options.threads, scan, less);
}

template <class T>
BridgeSolution<T> solve_exact(const WeightedTree& t1, const WeightedTree& t2,
                              SolveOptions options) {
  DistanceTable<T> d1(t1);
  DistanceTable<T> d2(t2);
  return solve_exact(t1, d1, t2, d2, options);
}

namespace {

// |pq| == c, compared through squares so irrational lengths need no sqrt.
bool length_equals(const Point& p, const Point& q, const Rational& c) {
  return squared_distance(p, q) == c * c;
}

bool length_equals(const Point& p, const Point& q, double c) {
  return Arith<double>::equal(euclidean_distance(p, q).to_double(), c);
}

}  // namespace

template <class T>
std::optional<DecisionWitness> one_bridge_decide(const WeightedTree& t1, const WeightedTree& t2,
                                                 const T& c1, const T& c2) {
  if (Arith<T>::less(c1, Arith<T>::zero()) || Arith<T>::less(c2, Arith<T>::zero())) {
    throw InputError("decision thresholds must be non-negative");
  }
  std::vector<std::size_t> leaves1 = t1.leaves();
  std::vector<std::size_t> leaves2 = t2.leaves();
  std::optional<DistanceTable<T>> d1;
  std::optional<DistanceTable<T>> d2;
  for (std::size_t p = 0; p < t1.size(); ++p) {
    for (std::size_t q = 0; q < t2.size(); ++q) {
      if (!length_equals(t1.point(p), t2.point(q), c1)) continue;
      if (!d1) {
        d1.emplace(t1);
        d2.emplace(t2);
      }
      for (std::size_t x : leaves1) {
        T rest = c2 - c1 - (*d1)(x, p);
        for (std::size_t y : leaves2) {
          if (Arith<T>::equal((*d2)(q, y), rest)) return DecisionWitness{p, q, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

template <class T>
BridgeSolution<T> approx_greedy(const WeightedTree& t1, const WeightedTree& t2) {
  ClosestPair cp = bichromatic_closest_pair(t1.points(), t2.points());
  SingleSource<T> from_p = single_source<T>(t1, cp.a);
  SingleSource<T> from_q = single_source<T>(t2, cp.b);
  BridgeSolution<T> s;
  s.p = cp.a;
  s.q = cp.b;
  s.bridge_length = detail::segment_length<T>(t1, cp.a, t2, cp.b);
  s.witness_x = from_p.farthest;
  s.witness_y = from_q.farthest;
  s.value = from_p.distance[s.witness_x] + s.bridge_length + from_q.distance[s.witness_y];
  return s;
}

namespace {

struct PairKey {
  Rational d2;
  std::size_t a;
  std::size_t b;
};

bool key_less(const PairKey& x, const PairKey& y) {
  int c = cmp(x.d2, y.d2);
  if (c != 0) return c < 0;
  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
}

// Median-split tree over the second set; each point of the first set
// descends it nearest side first. Pruning runs in double with a slack far
// above rounding error, and every surviving candidate is compared exactly,
// so ties resolve as in a full scan.
class ClosestPairSearch {
 public:
  ClosestPairSearch(std::span<const Point> a, std::span<const Point> b) : a_(a), b_(b) {
    double m = 0;
    for (auto set : {a, b}) {
      for (const Point& p : set) {
        m = std::max({m, std::abs(p.x.get_d()), std::abs(p.y.get_d())});
      }
    }
    slack_ = 1e-12 * (1 + m) * (1 + m);
    for (const Point& p : a) approx_a_.push_back({p.x.get_d(), p.y.get_d()});
    for (const Point& p : b) approx_b_.push_back({p.x.get_d(), p.y.get_d()});
    order_.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) order_[i] = i;
    build(0, b.size(), 0);
  }

  PairKey run() {
    for (std::size_t i = 0; i < a_.size(); ++i) query(0, i);
    return *best_;
  }

 private:
  static constexpr std::size_t kLeaf = 8;

  struct Node {
    std::size_t lo, hi;
    double x0, y0, x1, y1;
    std::size_t left = 0, right = 0;  // 0 marks a leaf; the root is never a child
  };

  std::size_t build(std::size_t lo, std::size_t hi, int axis) {
    const std::size_t id = nodes_.size();
    nodes_.push_back({lo, hi, INFINITY, INFINITY, -INFINITY, -INFINITY});
    for (std::size_t i = lo; i < hi; ++i) {
      const PointD& p = approx_b_[order_[i]];
      Node& n = nodes_[id];
      n.x0 = std::min(n.x0, p.x);
      n.y0 = std::min(n.y0, p.y);
      n.x1 = std::max(n.x1, p.x);
      n.y1 = std::max(n.y1, p.y);
    }
    if (hi - lo > kLeaf) {
      const std::size_t mid = lo + (hi - lo) / 2;
      std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                       [&](std::size_t l, std::size_t r) {
                         return axis == 0 ? approx_b_[l].x < approx_b_[r].x : approx_b_[l].y < approx_b_[r].y;
                       });
      const std::size_t left = build(lo, mid, 1 - axis);
      const std::size_t right = build(mid, hi, 1 - axis);
      nodes_[id].left = left;
      nodes_[id].right = right;
    }
    return id;
  }

  double lower_bound(const Node& n, const PointD& p) const {
    const double dx = std::max({n.x0 - p.x, 0.0, p.x - n.x1});
    const double dy = std::max({n.y0 - p.y, 0.0, p.y - n.y1});
    return dx * dx + dy * dy;
  }

  bool may_beat(double d2) const { return !best_ || d2 <= best_approx_ + slack_; }

  void query(std::size_t id, std::size_t i) {
    const Node& n = nodes_[id];
    const PointD& p = approx_a_[i];
    if (!may_beat(lower_bound(n, p))) return;
    if (n.left == 0) {
      for (std::size_t k = n.lo; k < n.hi; ++k) {
        const std::size_t j = order_[k];
        const double dx = p.x - approx_b_[j].x;
        const double dy = p.y - approx_b_[j].y;
        if (!may_beat(dx * dx + dy * dy)) continue;
        PairKey key{squared_distance(a_[i], b_[j]), i, j};
        if (!best_ || key_less(key, *best_)) {
          best_approx_ = key.d2.get_d();
          best_ = std::move(key);
        }
      }
      return;
    }
    std::size_t first = n.left, second = n.right;
    if (lower_bound(nodes_[second], p) < lower_bound(nodes_[first], p)) std::swap(first, second);
    query(first, i);
    query(second, i);
  }

  std::span<const Point> a_;
  std::span<const Point> b_;
  std::vector<PointD> approx_a_;
  std::vector<PointD> approx_b_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
  double slack_ = 0;
  double best_approx_ = 0;
  std::optional<PairKey> best_;
};

}  // namespace

ClosestPair bichromatic_closest_pair(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) throw InputError("closest pair needs two non-empty sets");
  PairKey key = ClosestPairSearch(a, b).run();
  return {key.a, key.b, key.d2};
}

TreePair gen_fig2_instance(long n, const Rational& eps) {
  if (n < 1) throw InputError("fig2 needs n >= 1");
  if (eps <= 0 || eps >= 1) throw InputError("fig2 needs 0 < eps < 1");
  Rational w(n);
  auto on_axis = [](Rational x) { return Point{std::move(x), Rational(0)}; };
  // Collinear layout keeps every cross distance exact; the explicit weights
  // stand in for the rotated segments of length n.
  WeightedTree t1({on_axis(-3), on_axis(0), on_axis(3)}, {{0, 1, w}, {1, 2, w}},
                  {"a", "b", "c"});
  WeightedTree t2({on_axis(6), on_axis(1), on_axis(Rational(4) - eps)}, {{0, 1, w}, {1, 2, w}},
                  {"d", "e", "f"});
  return {std::move(t1), std::move(t2)};
}

#define BRIDGEWORKS_INSTANTIATE(T)                                                            \
  template BridgeSolution<T> evaluate_bridge<T>(const WeightedTree&, const DistanceTable<T>&, \
                                                const WeightedTree&, const DistanceTable<T>&, \
                                                std::size_t, std::size_t);                    \
  template BridgeSolution<T> solve_exact<T>(const WeightedTree&, const DistanceTable<T>&,     \
                                            const WeightedTree&, const DistanceTable<T>&,     \
                                            SolveOptions);                                    \
  template BridgeSolution<T> solve_exact<T>(const WeightedTree&, const WeightedTree&,         \
                                            SolveOptions);                                    \
  template std::optional<DecisionWitness> one_bridge_decide<T>(                               \
      const WeightedTree&, const WeightedTree&, const T&, const T&);                          \
  template BridgeSolution<T> approx_greedy<T>(const WeightedTree&, const WeightedTree&);

BRIDGEWORKS_INSTANTIATE(Rational)
BRIDGEWORKS_INSTANTIATE(double)

#undef BRIDGEWORKS_INSTANTIATE

}  // namespace bridgeworks
