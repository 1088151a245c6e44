#pragma once

#include <string>
#include <vector>

#include "bridgeworks/graph.hpp"

namespace bwcli {

struct DotBridge {
  std::size_t tree_a;
  std::size_t vertex_a;
  std::size_t tree_b;
  std::size_t vertex_b;
};

/// Graphviz source with pinned positions (render with `neato -n`). Tree i's
/// vertices are named t<i>_<index>; bridges are drawn dashed.
std::string to_dot(const std::vector<const bridgeworks::EmbeddedGraph*>& parts,
                   const std::vector<DotBridge>& bridges);

}  // namespace bwcli
