#include "bridgeworks/reductions/rdbp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bridgeworks/planar.hpp"

namespace bridgeworks {

namespace {

double point_segment_distance(const PointD& p, const PointD& a, const PointD& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 == 0 ? 0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool connected_without(const EmbeddedGraph& g, std::size_t removed) {
  const std::size_t n = g.size();
  std::size_t start = removed == 0 ? 1 : 0;
  if (start >= n) return true;
  std::vector<bool> seen(n, false);
  seen[start] = true;
  std::vector<std::size_t> stack{start};
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.vertex == removed || seen[nb.vertex]) continue;
      seen[nb.vertex] = true;
      ++count;
      stack.push_back(nb.vertex);
    }
  }
  return count == n - (removed < n ? 1 : 0);
}

// Combinations of k out of n in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

double min_feature_distance(const EmbeddedGraph& g) {
  double best = INFINITY;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const PointD& p = g.approx_point(i);
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const PointD& q = g.approx_point(j);
      best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    }
    for (const Edge& e : g.edges()) {
      if (e.u == i || e.v == i) continue;
      best = std::min(best, point_segment_distance(p, g.approx_point(e.u), g.approx_point(e.v)));
    }
  }
  return best;
}

bool is_two_connected(const EmbeddedGraph& g) {
  if (g.size() < 3) return false;
  if (!connected_without(g, g.size())) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!connected_without(g, v)) return false;
  }
  return true;
}

RdbpInstance vc_to_rdbp(const PlanarGraph& g, std::size_t budget) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 3) throw InputError("graph is not cubic: vertex " + g.label(v));
  }
  if (!is_two_connected(g)) throw InputError("graph is not 2-connected");
  if (!validate_planar(g).empty()) throw InputError("embedding has crossing edges");

  const double eps = min_feature_distance(g) / 4;
  const double rho = eps;
  const std::size_t n = g.size();

  std::vector<Point> points(g.points().begin(), g.points().end());
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, std::nullopt});

  auto add = [&](double x, double y, std::string label) {
    points.push_back({Rational(x), Rational(y)});
    labels.push_back(std::move(label));
    return points.size() - 1;
  };

  std::vector<Gadget> gadgets(n);
  double min_saving = INFINITY;
  for (std::size_t u = 0; u < n; ++u) {
    const PointD c = g.approx_point(u);
    std::vector<std::pair<double, std::size_t>> around;
    for (const Neighbor& nb : g.neighbors(u)) {
      const PointD& q = g.approx_point(nb.vertex);
      around.emplace_back(std::atan2(q.y - c.y, q.x - c.x), nb.vertex);
    }
    std::sort(around.begin(), around.end());
    // Widest angular gap between consecutive incident edges.
    double gap = -1;
    double start = 0;
    for (std::size_t i = 0; i < around.size(); ++i) {
      double from = around[i].first;
      double to = around[(i + 1) % around.size()].first;
      double span = to - from;
      if (span <= 0) span += 2 * std::numbers::pi;
      if (span > gap) {
        gap = span;
        start = from;
      }
    }
    const double phi = start + gap / 2;
    const double e1x = std::cos(phi), e1y = std::sin(phi);
    const double e2x = -e1y, e2y = e1x;
    auto at = [&](double a, double b) { return PointD{c.x + rho * (a * e1x + b * e2x), c.y + rho * (a * e1y + b * e2y)}; };

    const std::string& name = g.label(u);
    Gadget& gd = gadgets[u];
    gd.center = u;
    PointD p2 = at(0.1, 0), p3 = at(0.4, 0.5), p1 = at(0.7, 0);
    gd.u2 = add(p2.x, p2.y, name + ".u2");
    gd.u3 = add(p3.x, p3.y, name + ".u3");
    gd.u1 = add(p1.x, p1.y, name + ".u1");
    edges.push_back({u, gd.u2, std::nullopt});
    edges.push_back({gd.u2, gd.u3, std::nullopt});
    edges.push_back({gd.u3, gd.u1, std::nullopt});

    const double detour = std::hypot(p1.x - p3.x, p1.y - p3.y) + std::hypot(p3.x - p2.x, p3.y - p2.y);
    min_saving = std::min(min_saving, detour - std::hypot(p1.x - p2.x, p1.y - p2.y));

    for (std::size_t i = 0; i < 3; ++i) {
      const double turn = (static_cast<double>(i) - 1.0) * 0.35;
      const double dx = std::cos(phi + turn), dy = std::sin(phi + turn);
      std::size_t prev = gd.u1;
      const std::string branch = name + ".to." + g.label(around[i].second);
      const double steps[] = {0.1, 0.3, 0.6};
      const char* tags[] = {".a", ".b", ".t"};
      for (std::size_t s = 0; s < 3; ++s) {
        std::size_t cur = add(p1.x + rho * steps[s] * dx, p1.y + rho * steps[s] * dy, branch + tags[s]);
        edges.push_back({prev, cur, std::nullopt});
        prev = cur;
      }
      gd.terminals[i] = prev;
      gd.neighbors[i] = around[i].second;
    }
  }
  if (!(min_saving >= eps / 2)) throw std::logic_error("gadget detour saving below eps / 2");

  PlanarGraph out(std::move(points), std::move(edges), std::move(labels));
  if (!validate_planar(out).empty()) throw std::logic_error("gadget embedding is not plane");

  auto terminal = [&](std::size_t u, std::size_t x) {
    const Gadget& gd = gadgets[u];
    for (std::size_t i = 0; i < 3; ++i) {
      if (gd.neighbors[i] == x) return gd.terminals[i];
    }
    throw std::logic_error("missing gadget branch");
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(terminal(e.u, e.v), terminal(e.v, e.u));
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  std::vector<Length> lengths;
  for (const Gadget& gd : gadgets) {
    candidates.emplace_back(gd.u1, gd.u2);
    lengths.push_back(euclidean_distance(out.point(gd.u1), out.point(gd.u2)));
  }
  return RdbpInstance{std::move(out), std::move(pairs), budget,          std::move(candidates),
                      std::move(lengths), std::move(gadgets), eps, min_saving};
}

namespace {

std::vector<double> pair_distances(const EmbeddedGraph& g,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<double> out;
  std::optional<ShortestPaths<double>> sp;
  std::size_t source = g.size();
  for (const auto& [a, b] : pairs) {
    if (a != source) {
      sp = dijkstra<double>(g, a);
      source = a;
    }
    out.push_back(sp->reached[b] ? sp->distance[b] : INFINITY);
  }
  return out;
}

}  // namespace

bool shortcuts_accept(const RdbpInstance& inst, const std::vector<std::size_t>& shortcuts) {
  std::vector<double> before = pair_distances(inst.graph, inst.pairs);
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  for (std::size_t s : shortcuts) extra.push_back(inst.candidates.at(s));
  PlanarGraph augmented = inst.graph.with_edges(extra);
  std::vector<double> after = pair_distances(augmented, inst.pairs);
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (!Arith<double>::less(after[i], before[i])) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> rdbp_brute_force(const RdbpInstance& inst) {
  const std::size_t c = inst.candidates.size();
  const std::size_t k = inst.budget;
  if (k > c) return std::nullopt;
  if (binomial(c, k) > 1e6) throw InputError("rdbp brute force limited to 10^6 subsets");
  std::vector<double> before = pair_distances(inst.graph, inst.pairs);
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  do {
    std::vector<std::pair<std::size_t, std::size_t>> extra;
    for (std::size_t s : pick) extra.push_back(inst.candidates[s]);
    std::vector<double> after = pair_distances(inst.graph.with_edges(extra), inst.pairs);
    bool ok = true;
    for (std::size_t i = 0; i < before.size() && ok; ++i) ok = Arith<double>::less(after[i], before[i]);
    if (ok) return pick;
  } while (next_combination(pick, c));
  return std::nullopt;
}

std::size_t rdbp_min_budget(RdbpInstance inst) {
  for (std::size_t k = 0; k <= inst.candidates.size(); ++k) {
    inst.budget = k;
    if (rdbp_brute_force(inst)) return k;
  }
  throw InputError("no shortcut subset shortens every pair");
}

std::optional<std::vector<std::size_t>> vertex_cover_brute_force(const EmbeddedGraph& g,
                                                                 std::size_t limit) {
  const std::size_t n = g.size();
  if (n > 20) throw InputError("vertex cover brute force limited to 20 vertices");
  for (std::size_t size = 0; size <= std::min(limit, n); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    do {
      std::vector<bool> in(n, false);
      for (std::size_t v : pick) in[v] = true;
      bool covers = std::all_of(g.edges().begin(), g.edges().end(),
                                [&](const Edge& e) { return in[e.u] || in[e.v]; });
      if (covers) return pick;
    } while (next_combination(pick, n));
  }
  return std::nullopt;
}

}  // namespace bridgeworks
