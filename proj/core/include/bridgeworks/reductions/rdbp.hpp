#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bridgeworks/graph.hpp"

namespace bridgeworks {

/// Vertices that replace one original vertex u. The center keeps u's index
/// and its three long edges; u - u2 - u3 - u1 is the detour the shortcut
/// (u1, u2) bypasses. terminals[i] ends the padded branch for u's i-th
/// incident edge.
struct Gadget {
  std::size_t center = 0;
  std::size_t u1 = 0;
  std::size_t u2 = 0;
  std::size_t u3 = 0;
  std::array<std::size_t, 3> terminals{};
  std::array<std::size_t, 3> neighbors{};  // original neighbor per branch
};

struct RdbpInstance {
  PlanarGraph graph;
  /// One pair per original edge, in the original edge order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t budget = 0;
  /// Candidate shortcut (u1, u2) of every original vertex, in vertex order.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  std::vector<Length> candidate_lengths;
  std::vector<Gadget> gadgets;
  double eps = 0.0;
  /// Smallest saving of a shortcut over its detour; at least eps / 2.
  double min_saving = 0.0;
};

/// Smallest vertex-vertex or vertex-to-non-incident-edge distance.
double min_feature_distance(const EmbeddedGraph& g);

/// True if removing any single vertex leaves g connected (and g is).
bool is_two_connected(const EmbeddedGraph& g);

/// Replaces every vertex of a plane cubic 2-connected graph by a gadget
/// placed in the widest angle at the vertex, within 1.3 eps of it, where
/// eps is a quarter of the minimum feature distance.
RdbpInstance vc_to_rdbp(const PlanarGraph& g, std::size_t budget);

/// First k-subset (lexicographic in candidate order) of shortcuts that
/// strictly shortens every pair, k = inst.budget. Refuses more than 10^6
/// subsets.
std::optional<std::vector<std::size_t>> rdbp_brute_force(const RdbpInstance& inst);

/// Smallest budget for which rdbp_brute_force succeeds.
std::size_t rdbp_min_budget(RdbpInstance inst);

/// True if every pair gets strictly closer once `shortcuts` are inserted.
bool shortcuts_accept(const RdbpInstance& inst, const std::vector<std::size_t>& shortcuts);

/// A minimum vertex cover if its size is at most `limit`. Subsets are
/// scanned by size, then lexicographically. Requires |V| <= 20.
std::optional<std::vector<std::size_t>> vertex_cover_brute_force(const EmbeddedGraph& g,
                                                                 std::size_t limit);

}  // namespace bridgeworks
