#include "dot.hpp"

#include <algorithm>
#include <sstream>

namespace bwcli {

namespace {

constexpr const char* kColors[] = {"black", "blue", "darkgreen", "purple", "brown", "gray40"};

std::string name(std::size_t tree, std::size_t v) {
  return "t" + std::to_string(tree) + "_" + std::to_string(v);
}

}  // namespace

std::string to_dot(const std::vector<const bridgeworks::EmbeddedGraph*>& parts,
                   const std::vector<DotBridge>& bridges) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool first = true;
  for (const auto* g : parts) {
    for (std::size_t v = 0; v < g->size(); ++v) {
      const auto& p = g->approx_point(v);
      if (first) {
        min_x = max_x = p.x;
        min_y = max_y = p.y;
        first = false;
      }
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  // Scale the drawing to roughly 600 points across.
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = 600.0 / span;

  std::ostringstream out;
  out << "graph bridgeworks {\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const auto& g = *parts[t];
    const char* color = kColors[t % std::size(kColors)];
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& p = g.approx_point(v);
      out << "  " << name(t, v) << " [label=\"" << g.label(v) << "\", color=" << color
          << ", pos=\"" << (p.x - min_x) * scale << "," << (p.y - min_y) * scale << "!\"];\n";
    }
    for (std::size_t id = 0; id < g.edges().size(); ++id) {
      const auto& e = g.edges()[id];
      out << "  " << name(t, e.u) << " -- " << name(t, e.v) << " [color=" << color
          << "];\n";
    }
  }
  for (const auto& b : bridges) {
    out << "  " << name(b.tree_a, b.vertex_a) << " -- " << name(b.tree_b, b.vertex_b)
        << " [color=red, style=dashed, penwidth=2];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bwcli
