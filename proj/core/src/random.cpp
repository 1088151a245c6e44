#include "bridgeworks/random.hpp"

#include <algorithm>
#include <numeric>

namespace bridgeworks {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

namespace {

std::vector<EdgeSpec> random_parents(std::size_t n, std::mt19937_64& rng) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({uniform_below(rng, i), i, std::nullopt});
  return edges;
}

}  // namespace

WeightedTree gen_random_tree(std::size_t n, std::uint64_t seed, const BoundingBox& box) {
  if (n == 0) throw InputError("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  constexpr std::uint64_t kGrid = 1u << 20;
  std::vector<Point> points;
  for (std::size_t i = 0; i < n; ++i) {
    Rational fx(static_cast<unsigned long>(uniform_below(rng, kGrid)), kGrid);
    Rational fy(static_cast<unsigned long>(uniform_below(rng, kGrid)), kGrid);
    fx.canonicalize();
    fy.canonicalize();
    points.push_back({box.x0 + (box.x1 - box.x0) * fx, box.y0 + (box.y1 - box.y0) * fy});
  }
  return WeightedTree(std::move(points), random_parents(n, rng));
}

std::vector<WeightedTree> gen_exact_trees(std::span<const std::size_t> sizes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Distinct reduced parameters a/b, 1 <= a, b <= 9.
  std::vector<Rational> params;
  for (long a = 1; a <= 9; ++a) {
    for (long b = 1; b <= 9; ++b) {
      if (std::gcd(a, b) == 1) params.emplace_back(a, b);
    }
  }
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (total > params.size()) throw InputError("too many vertices for the exact circle family");
  for (std::size_t i = 0; i < total; ++i) {
    std::swap(params[i], params[i + uniform_below(rng, params.size() - i)]);
  }
  const Rational radius(static_cast<long>(5 + uniform_below(rng, 6)));
  std::vector<WeightedTree> out;
  std::size_t next = 0;
  for (std::size_t n : sizes) {
    if (n == 0) throw InputError("tree needs at least one vertex");
    std::vector<Point> points;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& t = params[next++];
      const Rational den = 1 + t * t;
      const Rational s = 2 * t / den;        // sin(phi)
      const Rational c = (1 - t * t) / den;  // cos(phi)
      // The point at angle 2 phi; chords are 2 R |sin(phi_i - phi_j)|.
      points.push_back({radius * (c * c - s * s), radius * (2 * s * c)});
    }
    out.emplace_back(std::move(points), random_parents(n, rng));
  }
  return out;
}

OneInThreeSat gen_random_sat(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw InputError("formula needs at least one variable");
  std::mt19937_64 rng(seed);
  OneInThreeSat phi;
  phi.variables = n;
  for (std::size_t i = 0; i < m; ++i) {
    std::array<int, 3> clause{};
    for (int& lit : clause) {
      lit = static_cast<int>(uniform_below(rng, n)) + 1;
      if (uniform_below(rng, 2) == 1) lit = -lit;
    }
    phi.clauses.push_back(clause);
  }
  return phi;
}

}  // namespace bridgeworks
