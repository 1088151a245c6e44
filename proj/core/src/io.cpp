#include "bridgeworks/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace bridgeworks {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Splits into per-line token lists, dropping comments and blank lines.
std::vector<std::vector<Token>> tokenize(std::string_view text, bool c_comments) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      char ch = line[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      if (c_comments && ch == 'c' && tokens.empty()) break;
      if (ch == '#') break;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
             line[i] != '#') {
        ++i;
      }
      tokens.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& message) {
  throw ParseError(t.line, t.column, message);
}

std::size_t parse_count(const Token& t) {
  std::size_t value = 0;
  if (t.text.empty() || t.text.size() > 9) fail(t, "expected a count, got '" + t.text + "'");
  for (char ch : t.text) {
    if (ch < '0' || ch > '9') fail(t, "expected a count, got '" + t.text + "'");
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

Rational parse_number(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const InputError& e) {
    fail(t, e.what());
  }
}

struct RawGraph {
  std::vector<Point> points;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> labels;
};

RawGraph parse_raw(std::string_view text) {
  auto lines = tokenize(text, false);
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected 'n m'");
  const auto& header = lines[0];
  if (header.size() != 2) fail(header[0], "header must be 'n m'");
  const std::size_t n = parse_count(header[0]);
  const std::size_t m = parse_count(header[1]);
  if (lines.size() < 1 + n + m) {
    const Token& last = lines.back().back();
    throw ParseError(last.line + 1, 1,
                     "expected " + std::to_string(n) + " vertex and " + std::to_string(m) +
                         " edge lines");
  }
  if (lines.size() > 1 + n + m) fail(lines[1 + n + m][0], "unexpected trailing content");
  RawGraph g;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[1 + i];
    if (row.size() != 3) fail(row[0], "vertex line must be 'id x y'");
    if (!index.emplace(row[0].text, i).second) fail(row[0], "duplicate vertex id '" + row[0].text + "'");
    g.points.push_back({parse_number(row[1]), parse_number(row[2])});
    g.labels.push_back(row[0].text);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lines[1 + n + i];
    if (row.size() != 2 && row.size() != 3) fail(row[0], "edge line must be 'u v [weight]'");
    EdgeSpec spec;
    for (std::size_t k = 0; k < 2; ++k) {
      auto it = index.find(row[k].text);
      if (it == index.end()) fail(row[k], "unknown vertex id '" + row[k].text + "'");
      (k == 0 ? spec.u : spec.v) = it->second;
    }
    if (row.size() == 3) {
      spec.weight = parse_number(row[2]);
      if (*spec.weight < 0) fail(row[2], "negative edge weight");
    }
    g.edges.push_back(std::move(spec));
  }
  return g;
}

}  // namespace

WeightedTree parse_tree(std::string_view text) {
  RawGraph g = parse_raw(text);
  return WeightedTree(std::move(g.points), std::move(g.edges), std::move(g.labels));
}

PlanarGraph parse_graph(std::string_view text) {
  RawGraph g = parse_raw(text);
  return PlanarGraph(std::move(g.points), std::move(g.edges), std::move(g.labels));
}

std::string serialize_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edges().size() << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.label(i) << ' ' << format_rational(g.point(i).x) << ' '
        << format_rational(g.point(i).y) << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v);
    if (e.explicit_weight) out << ' ' << format_rational(e.length.rational());
    out << '\n';
  }
  return out.str();
}

namespace {

using nlohmann::json;

RawGraph raw_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  RawGraph g;
  try {
    std::map<std::string, std::size_t> index;
    for (const json& v : doc.at("vertices")) {
      std::string id = v.at("id").is_string() ? v.at("id").get<std::string>() : v.at("id").dump();
      if (!index.emplace(id, g.points.size()).second) throw InputError("duplicate vertex id '" + id + "'");
      g.points.push_back({parse_rational(v.at("x").get<std::string>()),
                          parse_rational(v.at("y").get<std::string>())});
      g.labels.push_back(std::move(id));
    }
    for (const json& e : doc.at("edges")) {
      EdgeSpec spec;
      for (const char* key : {"u", "v"}) {
        std::string id = e.at(key).is_string() ? e.at(key).get<std::string>() : e.at(key).dump();
        auto it = index.find(id);
        if (it == index.end()) throw InputError("unknown vertex id '" + id + "'");
        (key[0] == 'u' ? spec.u : spec.v) = it->second;
      }
      if (e.contains("weight")) spec.weight = parse_rational(e.at("weight").get<std::string>());
      g.edges.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  return g;
}

}  // namespace

WeightedTree tree_from_json(std::string_view text) {
  RawGraph g = raw_from_json(text);
  return WeightedTree(std::move(g.points), std::move(g.edges), std::move(g.labels));
}

PlanarGraph graph_from_json(std::string_view text) {
  RawGraph g = raw_from_json(text);
  return PlanarGraph(std::move(g.points), std::move(g.edges), std::move(g.labels));
}

std::string graph_to_json(const EmbeddedGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    doc["vertices"].push_back({{"id", g.label(i)},
                               {"x", format_rational(g.point(i).x)},
                               {"y", format_rational(g.point(i).y)}});
  }
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json edge = {{"u", g.label(e.u)}, {"v", g.label(e.v)}};
    if (e.explicit_weight) edge["weight"] = format_rational(e.length.rational());
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

OneInThreeSat parse_sat(std::string_view text) {
  auto lines = tokenize(text, true);
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected 'p cnf n m'");
  const auto& header = lines[0];
  if (header.size() != 4 || header[0].text != "p" || header[1].text != "cnf") {
    fail(header[0], "header must be 'p cnf n m'");
  }
  OneInThreeSat phi;
  phi.variables = parse_count(header[2]);
  const std::size_t m = parse_count(header[3]);
  std::vector<Token> literals;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    literals.insert(literals.end(), lines[i].begin(), lines[i].end());
  }
  std::vector<Token> current;
  for (const Token& t : literals) {
    long value = 0;
    try {
      std::size_t used = 0;
      value = std::stol(t.text, &used);
      if (used != t.text.size()) fail(t, "expected an integer literal, got '" + t.text + "'");
    } catch (const std::logic_error&) {
      fail(t, "expected an integer literal, got '" + t.text + "'");
    }
    if (value != 0) {
      if (static_cast<std::size_t>(std::labs(value)) > phi.variables) {
        fail(t, "variable " + std::to_string(std::labs(value)) + " exceeds n = " +
                    std::to_string(phi.variables));
      }
      current.push_back(t);
      continue;
    }
    if (current.size() != 3) {
      fail(t, "clause must have exactly 3 literals, got " + std::to_string(current.size()));
    }
    phi.clauses.push_back({std::stoi(current[0].text), std::stoi(current[1].text),
                           std::stoi(current[2].text)});
    current.clear();
  }
  if (!current.empty()) fail(current.front(), "clause is not terminated by 0");
  if (phi.clauses.size() != m) {
    fail(header[3], "header declares " + std::to_string(m) + " clauses, found " +
                        std::to_string(phi.clauses.size()));
  }
  return phi;
}

std::string serialize_sat(const OneInThreeSat& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.variables << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

namespace {

bool looks_like_json(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  return i != std::string_view::npos && text[i] == '{';
}

template <class Result, class FromText, class FromJson>
Result load(const std::filesystem::path& path, FromText from_text, FromJson from_json) {
  std::string text = read_file(path);
  try {
    return looks_like_json(text) ? from_json(text) : from_text(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace

WeightedTree load_tree(const std::filesystem::path& path) {
  return load<WeightedTree>(path, parse_tree, tree_from_json);
}

PlanarGraph load_graph(const std::filesystem::path& path) {
  return load<PlanarGraph>(path, parse_graph, graph_from_json);
}

OneInThreeSat load_sat(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_sat(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace bridgeworks
