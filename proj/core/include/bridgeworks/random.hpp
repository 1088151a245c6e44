#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bridgeworks/graph.hpp"
#include "bridgeworks/reductions/sat.hpp"

namespace bridgeworks {

struct BoundingBox {
  Rational x0 = 0;
  Rational y0 = 0;
  Rational x1 = 100;
  Rational y1 = 100;
};

/// Uniform k in [0, bound). Same sequence on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// n points uniform on a 2^20 grid over `box`; vertex i > 0 attaches to a
/// uniformly chosen earlier vertex. Lengths are generally irrational.
WeightedTree gen_random_tree(std::size_t n, std::uint64_t seed, const BoundingBox& box = {});

/// Trees of the given sizes whose vertices all lie on one circle at
/// rational-parameter positions, so every pairwise distance (inside a tree
/// or across trees) is rational. At most 55 vertices in total.
std::vector<WeightedTree> gen_exact_trees(std::span<const std::size_t> sizes, std::uint64_t seed);

/// m clauses of three literals over n variables, uniform with random signs.
OneInThreeSat gen_random_sat(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace bridgeworks
