#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bridgeworks/graph.hpp"

namespace bridgeworks {

/// Pairs of edge indices (i < j) whose segments meet although the edges share
/// no endpoint. Empty iff the straight-line drawing is plane. O(m^2) exact
/// orientation tests.
std::vector<std::pair<std::size_t, std::size_t>> validate_planar(const EmbeddedGraph& graph);

}  // namespace bridgeworks
