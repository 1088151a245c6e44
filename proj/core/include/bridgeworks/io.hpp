#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bridgeworks/graph.hpp"
#include "bridgeworks/reductions/sat.hpp"

namespace bridgeworks {

// Text format:
//   n m
//   id x y          (n lines; coordinates are decimals or p/q)
//   u v [weight]    (m lines; u, v are ids)
// '#' starts a comment. Malformed input throws ParseError with the line and
// column of the offending token.

WeightedTree parse_tree(std::string_view text);
PlanarGraph parse_graph(std::string_view text);

/// Writes the text format. Coordinates and explicit weights are exact.
std::string serialize_graph(const EmbeddedGraph& g);

/// JSON mirror: {"vertices": [{"id", "x", "y"}], "edges": [{"u", "v", "weight"?}]}
/// with coordinates and weights as strings.
WeightedTree tree_from_json(std::string_view text);
PlanarGraph graph_from_json(std::string_view text);
std::string graph_to_json(const EmbeddedGraph& g);

/// DIMACS-like: "p cnf n m", then m clauses of exactly three literals, each
/// terminated by 0. 'c' and '#' lines are comments.
OneInThreeSat parse_sat(std::string_view text);
std::string serialize_sat(const OneInThreeSat& phi);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Reads a file in either format; JSON is recognised by a leading '{'.
WeightedTree load_tree(const std::filesystem::path& path);
PlanarGraph load_graph(const std::filesystem::path& path);
OneInThreeSat load_sat(const std::filesystem::path& path);

}  // namespace bridgeworks
