#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "dot.hpp"
#include "report.hpp"

namespace bw = bridgeworks;
using namespace bwcli;
namespace fs = std::filesystem;

namespace {

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::vector<std::string> command;
  bool printed = false;  // the handler wrote its own human-readable output
};

// A handler fills the report and returns the exit code.
using Handler = std::function<int(RunReport&)>;

template <class F>
auto with_backend(bw::Backend backend, F&& f) {
  if (backend == bw::Backend::kRational) return f(bw::Rational{});
  return f(double{});
}

void emit_dot(const std::string& path, const std::vector<const bw::EmbeddedGraph*>& parts,
              const std::vector<DotBridge>& bridges) {
  if (!path.empty()) bw::write_file(path, to_dot(parts, bridges));
}

json vertex(const bw::EmbeddedGraph& g, std::size_t v) { return {{"index", v}, {"label", g.label(v)}}; }

// Global numbering of the twin evaluator: T2 vertex v is n1 + v.
json global_vertex(const bw::WeightedTree& t1, const bw::WeightedTree& t2, std::size_t v) {
  if (v < t1.size()) return {{"tree", 1}, {"index", v}, {"label", t1.label(v)}};
  return {{"tree", 2}, {"index", v - t1.size()}, {"label", t2.label(v - t1.size())}};
}

void print_human(const json& solution) {
  for (const auto& [key, value] : solution.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

fs::path prepare_dir(const std::string& dir) {
  fs::path out(dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw bw::InputError("cannot create directory " + dir + ": " + ec.message());
  return out;
}

// ---------------------------------------------------------------------------

struct TreePairArgs {
  std::string t1;
  std::string t2;
  std::string dot;
};

void add_tree_pair(CLI::App* sub, TreePairArgs& args) {
  sub->add_option("--t1", args.t1, "first tree file")->required()->check(CLI::ExistingFile);
  sub->add_option("--t2", args.t2, "second tree file")->required()->check(CLI::ExistingFile);
  sub->add_option("--emit-dot", args.dot, "write a Graphviz drawing");
}

template <class T>
json bridge_solution(const bw::WeightedTree& t1, const bw::WeightedTree& t2, const bw::BridgeSolution<T>& s) {
  return {{"bridge", {{"p", vertex(t1, s.p)}, {"q", vertex(t2, s.q)}}},
          {"bridge_length", number(s.bridge_length)},
          {"value", number(s.value)},
          {"witness", {{"x", vertex(t1, s.witness_x)}, {"y", vertex(t2, s.witness_y)}}}};
}

Handler bridge_handler(const std::string& mode, const TreePairArgs& args, const Globals& g) {
  return [&, mode](RunReport& report) {
    auto t1 = bw::load_tree(args.t1);
    auto t2 = bw::load_tree(args.t2);
    report.add_input("t1", t1);
    report.add_input("t2", t2);
    std::vector<bw::WeightedTree> both{t1, t2};
    auto backend = choose_backend(both);
    report.set_backend(backend);
    auto [p, q] = with_backend(backend, [&](auto tag) {
      using T = decltype(tag);
      auto s = mode == "exact" ? bw::solve_exact<T>(t1, t2, {g.threads}) : bw::approx_greedy<T>(t1, t2);
      report.solution() = bridge_solution(t1, t2, s);
      return std::pair{s.p, s.q};
    });
    emit_dot(args.dot, {&t1, &t2}, {{0, p, 1, q}});
    return kOk;
  };
}

struct DecideArgs {
  TreePairArgs trees;
  std::string c1;
  std::string c2;
};

Handler decide_handler(const DecideArgs& args) {
  return [&](RunReport& report) {
    auto t1 = bw::load_tree(args.trees.t1);
    auto t2 = bw::load_tree(args.trees.t2);
    report.add_input("t1", t1);
    report.add_input("t2", t2);
    const bw::Rational c1 = bw::parse_rational(args.c1);
    const bw::Rational c2 = bw::parse_rational(args.c2);
    std::vector<bw::WeightedTree> both{t1, t2};
    auto backend = choose_backend(both);
    report.set_backend(backend);
    auto w = with_backend(backend, [&](auto tag) {
      using T = decltype(tag);
      return bw::one_bridge_decide<T>(t1, t2, bw::Arith<T>::from_rational(c1), bw::Arith<T>::from_rational(c2));
    });
    json& out = report.solution();
    out["c1"] = bw::format_rational(c1);
    out["c2"] = bw::format_rational(c2);
    out["found"] = w.has_value();
    if (w) {
      out["witness"] = {{"p", vertex(t1, w->p)}, {"q", vertex(t2, w->q)},
                        {"x", vertex(t1, w->x)}, {"y", vertex(t2, w->y)}};
      emit_dot(args.trees.dot, {&t1, &t2}, {{0, w->p, 1, w->q}});
    }
    return w ? kOk : kNo;
  };
}

struct ForestArgs {
  std::vector<std::string> files;
  std::string dot;
};

Handler forest_handler(const ForestArgs& args) {
  return [&](RunReport& report) {
    std::vector<bw::WeightedTree> trees;
    for (std::size_t i = 0; i < args.files.size(); ++i) {
      trees.push_back(bw::load_tree(args.files[i]));
      report.add_input("tree" + std::to_string(i), trees.back());
    }
    auto backend = choose_backend(trees);
    report.set_backend(backend);
    std::vector<DotBridge> drawn;
    with_backend(backend, [&](auto tag) {
      using T = decltype(tag);
      auto c = bw::connect_forest<T>(trees);
      json bridges = json::array();
      for (const auto& b : c.bridges) {
        bridges.push_back({{"tree_a", b.tree_a},
                           {"vertex_a", vertex(trees[b.tree_a], b.vertex_a)},
                           {"tree_b", b.tree_b},
                           {"vertex_b", vertex(trees[b.tree_b], b.vertex_b)}});
        drawn.push_back({b.tree_a, b.vertex_a, b.tree_b, b.vertex_b});
      }
      report.solution() = {{"hub", c.hub}, {"bridges", bridges}, {"diameter", number(c.diameter)}};
      return 0;
    });
    std::vector<const bw::EmbeddedGraph*> parts;
    for (const auto& t : trees) parts.push_back(&t);
    emit_dot(args.dot, parts, drawn);
    return kOk;
  };
}

struct TwinArgs {
  TreePairArgs trees;
  bool force = false;
};

Handler twin_handler(const std::string& mode, const TwinArgs& args, const Globals& g) {
  return [&, mode](RunReport& report) {
    auto t1 = bw::load_tree(args.trees.t1);
    auto t2 = bw::load_tree(args.trees.t2);
    report.add_input("t1", t1);
    report.add_input("t2", t2);
    std::vector<bw::WeightedTree> both{t1, t2};
    auto backend = choose_backend(both);
    report.set_backend(backend);
    bw::BridgePair bridges = with_backend(backend, [&](auto tag) {
      using T = decltype(tag);
      bw::TwinOptions options{g.threads, args.force};
      auto s = mode == "solve" ? bw::solve_twin<T>(t1, t2, options) : bw::brute_force_twin<T>(t1, t2, options);
      json& out = report.solution();
      out["bridges"] = json::array({{{"p", vertex(t1, s.bridges.p1)}, {"q", vertex(t2, s.bridges.q1)}},
                                    {{"p", vertex(t1, s.bridges.p2)}, {"q", vertex(t2, s.bridges.q2)}}});
      out["value"] = number(s.value);
      out["dominant_case"] = s.dominant_case;
      out["witness"] = {{"a", global_vertex(t1, t2, s.witness_a)}, {"b", global_vertex(t1, t2, s.witness_b)}};
      out["intersecting"] = s.intersecting;
      return s.bridges;
    });
    emit_dot(args.trees.dot, {&t1, &t2}, {{0, bridges.p1, 1, bridges.q1}, {0, bridges.p2, 1, bridges.q2}});
    return kOk;
  };
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string sat;
  std::string graph;
  std::string out_dir;
  std::string out;
  std::size_t k = 3;
  bool force = false;
};

std::string ternary(const bw::TernaryVector& v) {
  std::string s;
  for (auto d : v) s.push_back(static_cast<char>('0' + d));
  return s;
}

Handler sat_to_onebridge_handler(const ReduceArgs& args) {
  return [&](RunReport& report) {
    auto phi = bw::load_sat(args.sat);
    report.add_input("sat", phi);
    report.set_backend(bw::Backend::kRational);
    auto cov = bw::sat_to_cov(phi, args.force);
    auto red = bw::cov_to_one_bridge(cov);
    fs::path dir = prepare_dir(args.out_dir);
    std::ostringstream vectors;
    json a = json::array(), b = json::array();
    for (const auto& v : cov.a) {
      vectors << "A " << ternary(v) << "\n";
      a.push_back(ternary(v));
    }
    for (const auto& v : cov.b) {
      vectors << "B " << ternary(v) << "\n";
      b.push_back(ternary(v));
    }
    bw::write_file(dir / "t1.txt", bw::serialize_graph(red.t1));
    bw::write_file(dir / "t2.txt", bw::serialize_graph(red.t2));
    bw::write_file(dir / "cov.txt", vectors.str());
    report.solution() = {{"m", red.params.m},
                         {"C", bw::format_rational(red.params.c)},
                         {"c1", bw::format_rational(red.params.c1)},
                         {"c2", bw::format_rational(red.params.c2)},
                         {"vectors_a", a},
                         {"vectors_b", b},
                         {"t1_vertices", red.t1.size()},
                         {"t2_vertices", red.t2.size()},
                         {"files", {"t1.txt", "t2.txt", "cov.txt"}}};
    return kOk;
  };
}

Handler sat_to_ksum_handler(const ReduceArgs& args, Globals& g) {
  return [&](RunReport& report) {
    auto phi = bw::load_sat(args.sat);
    report.add_input("sat", phi);
    std::vector<bw::BigInt> values;
    std::vector<std::size_t> part_sizes;
    std::size_t digits = 0;
    if (args.k == 3) {
      auto inst = bw::sat_to_threesum(phi, args.force);
      values = inst.values;
      part_sizes = {inst.a_count, inst.b_count, 1};
      digits = inst.digits;
    } else {
      auto inst = bw::sat_to_ksum(phi, args.k, args.force);
      for (const auto& part : inst.parts) {
        values.insert(values.end(), part.begin(), part.end());
        part_sizes.push_back(part.size());
      }
      values.push_back(inst.target);
      part_sizes.push_back(1);
      digits = inst.digits;
    }
    std::ostringstream text;
    json listed = json::array();
    for (const auto& v : values) {
      text << v.get_str() << "\n";
      listed.push_back(v.get_str());
    }
    report.solution() = {{"k", args.k}, {"digits", digits}, {"part_sizes", part_sizes}, {"values", listed}};
    if (!args.out.empty()) {
      bw::write_file(args.out, text.str());
    } else if (!g.json) {
      std::cout << text.str();
      g.printed = true;
    }
    return kOk;
  };
}

std::string pairs_text(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::ostringstream out;
  for (auto [u, v] : pairs) out << u << " " << v << "\n";
  return out.str();
}

Handler vc_to_rdbp_handler(const ReduceArgs& args) {
  return [&](RunReport& report) {
    auto graph = bw::load_graph(args.graph);
    report.add_input("graph", graph);
    auto inst = bw::vc_to_rdbp(graph, args.k);
    fs::path dir = prepare_dir(args.out_dir);
    bw::write_file(dir / "graph.txt", bw::serialize_graph(inst.graph));
    bw::write_file(dir / "pairs.txt", pairs_text(inst.pairs));
    bw::write_file(dir / "candidates.txt", pairs_text(inst.candidates));
    report.solution() = {{"budget", inst.budget},
                         {"vertices", inst.graph.size()},
                         {"edges", inst.graph.edges().size()},
                         {"pairs", inst.pairs.size()},
                         {"candidates", inst.candidates.size()},
                         {"max_degree", inst.graph.max_degree()},
                         {"eps", inst.eps},
                         {"min_saving", inst.min_saving},
                         {"files", {"graph.txt", "pairs.txt", "candidates.txt"}}};
    return kOk;
  };
}

// ---------------------------------------------------------------------------

json assignment_json(const bw::Assignment& a) {
  json out = json::array();
  for (bool b : a) out.push_back(b);
  return out;
}

Handler iff_onebridge_handler(const ReduceArgs& args) {
  return [&](RunReport& report) {
    auto phi = bw::load_sat(args.sat);
    report.add_input("sat", phi);
    report.set_backend(bw::Backend::kRational);
    auto r = bw::verify_one_bridge_iff(phi);
    json& out = report.solution();
    out["satisfiable"] = r.satisfiable;
    out["cov"] = r.cov;
    out["bridge"] = r.bridge;
    out["agree"] = r.agree();
    if (r.assignment) out["assignment"] = assignment_json(*r.assignment);
    if (r.cov_pair) out["cov_pair"] = {r.cov_pair->first, r.cov_pair->second};
    return r.agree() ? kOk : kNo;
  };
}

Handler iff_ksum_handler(const ReduceArgs& args) {
  return [&](RunReport& report) {
    auto phi = bw::load_sat(args.sat);
    report.add_input("sat", phi);
    auto sat = bw::one_in_three_sat_brute_force(phi);
    bool witness = false;
    json indices = nullptr;
    if (args.k == 3) {
      auto inst = bw::sat_to_threesum(phi, args.force);
      if (auto w = bw::threesum_brute_force(inst.values)) {
        for (std::size_t i : *w) witness = witness || inst.values[i] == -bw::repunit(inst.digits);
        indices = *w;
      }
    } else {
      auto inst = bw::sat_to_ksum(phi, args.k, args.force);
      if (auto w = bw::ksum_brute_force(inst)) {
        witness = true;
        indices = *w;
      }
    }
    json& out = report.solution();
    out["k"] = args.k;
    out["satisfiable"] = sat.has_value();
    out["witness"] = witness;
    out["witness_indices"] = indices;
    out["agree"] = sat.has_value() == witness;
    if (sat) out["assignment"] = assignment_json(*sat);
    return sat.has_value() == witness ? kOk : kNo;
  };
}

Handler iff_rdbp_handler(const ReduceArgs& args) {
  return [&](RunReport& report) {
    auto graph = bw::load_graph(args.graph);
    report.add_input("graph", graph);
    auto inst = bw::vc_to_rdbp(graph, 0);
    const std::size_t budget = bw::rdbp_min_budget(inst);
    auto cover = bw::vertex_cover_brute_force(graph, graph.size());
    inst.budget = budget;
    auto shortcuts = bw::rdbp_brute_force(inst);
    // Shortcut i belongs to original vertex i.
    bool maps_to_cover = shortcuts.has_value();
    if (shortcuts) {
      std::vector<bool> chosen(graph.size(), false);
      for (std::size_t i : *shortcuts) chosen[i] = true;
      for (const auto& e : graph.edges()) maps_to_cover = maps_to_cover && (chosen[e.u] || chosen[e.v]);
    }
    const bool agree = cover && cover->size() == budget && maps_to_cover;
    json& out = report.solution();
    out["min_budget"] = budget;
    out["vertex_cover"] = cover ? json(cover->size()) : json(nullptr);
    out["shortcuts"] = shortcuts ? json(*shortcuts) : json(nullptr);
    out["shortcuts_form_cover"] = maps_to_cover;
    out["agree"] = agree;
    return agree ? kOk : kNo;
  };
}

// ---------------------------------------------------------------------------

struct GenArgs {
  long n = 3;
  std::string eps = "1/100";
  std::string out_dir;
  std::string out;
  std::string dot;
  std::uint64_t seed = 1;
  std::vector<std::string> bbox;
  std::vector<std::size_t> sizes;
  std::size_t m = 4;
};

int write_pair(RunReport& report, const bw::TreePair& pair, const GenArgs& args) {
  fs::path dir = prepare_dir(args.out_dir);
  bw::write_file(dir / "t1.txt", bw::serialize_graph(pair.first));
  bw::write_file(dir / "t2.txt", bw::serialize_graph(pair.second));
  report.add_input("t1", pair.first);
  report.add_input("t2", pair.second);
  report.solution()["files"] = {"t1.txt", "t2.txt"};
  emit_dot(args.dot, {&pair.first, &pair.second}, {});
  return kOk;
}

Handler gen_fig2_handler(const GenArgs& args) {
  return [&](RunReport& report) {
    const bw::Rational eps = bw::parse_rational(args.eps);
    auto pair = bw::gen_fig2_instance(args.n, eps);
    report.solution() = {{"n", args.n}, {"eps", bw::format_rational(eps)}};
    return write_pair(report, pair, args);
  };
}

Handler gen_fig3_handler(const GenArgs& args) {
  return [&](RunReport& report) {
    const bw::Rational eps = bw::parse_rational(args.eps);
    auto pair = bw::gen_fig3_instance(eps);
    report.solution() = {{"eps", bw::format_rational(eps)}};
    return write_pair(report, pair, args);
  };
}

// Writes `text` to --out, or embeds it in the report, or prints it.
int deliver(RunReport& report, const std::string& out, const std::string& text, Globals& g) {
  if (!out.empty()) {
    bw::write_file(out, text);
    report.solution()["file"] = out;
    return kOk;
  }
  report.solution()["text"] = text;
  if (!g.json) {
    std::cout << text;
    g.printed = true;
  }
  return kOk;
}

Handler gen_tree_handler(const GenArgs& args, Globals& g) {
  return [&](RunReport& report) {
    bw::BoundingBox box;
    if (!args.bbox.empty()) {
      if (args.bbox.size() != 4) throw bw::InputError("--bbox needs x0 y0 x1 y1");
      box = {bw::parse_rational(args.bbox[0]), bw::parse_rational(args.bbox[1]),
             bw::parse_rational(args.bbox[2]), bw::parse_rational(args.bbox[3])};
    }
    if (args.n < 1) throw bw::InputError("--n must be at least 1");
    report.set_seed(args.seed);
    auto tree = bw::gen_random_tree(static_cast<std::size_t>(args.n), args.seed, box);
    report.add_input("tree", tree);
    return deliver(report, args.out, bw::serialize_graph(tree), g);
  };
}

Handler gen_exact_handler(const GenArgs& args) {
  return [&](RunReport& report) {
    if (args.sizes.empty()) throw bw::InputError("--sizes is empty");
    report.set_seed(args.seed);
    auto trees = bw::gen_exact_trees(args.sizes, args.seed);
    fs::path dir = prepare_dir(args.out_dir);
    json files = json::array();
    std::vector<const bw::EmbeddedGraph*> parts;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::string name = "t" + std::to_string(i + 1) + ".txt";
      bw::write_file(dir / name, bw::serialize_graph(trees[i]));
      report.add_input("t" + std::to_string(i + 1), trees[i]);
      files.push_back(name);
      parts.push_back(&trees[i]);
    }
    report.solution()["files"] = files;
    emit_dot(args.dot, parts, {});
    return kOk;
  };
}

Handler gen_sat_handler(const GenArgs& args, Globals& g) {
  return [&](RunReport& report) {
    if (args.n < 1) throw bw::InputError("--n must be at least 1");
    report.set_seed(args.seed);
    auto phi = bw::gen_random_sat(static_cast<std::size_t>(args.n), args.m, args.seed);
    report.add_input("sat", phi);
    return deliver(report, args.out, bw::serialize_sat(phi), g);
  };
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  bw::BenchConfig config;
};

Handler bench_handler(BenchArgs& args, Globals& g) {
  return [&](RunReport& report) {
    args.config.threads = g.threads;
    report.set_backend(bw::Backend::kDouble);
    auto result = bw::run_bench(args.config);
    json rows = json::array(), fits = json::array();
    for (const auto& r : result.rows) rows.push_back({{"algorithm", r.algorithm}, {"n", r.n}, {"median_ms", r.median_ms}});
    for (const auto& f : result.fits) fits.push_back({{"algorithm", f.algorithm}, {"exponent", f.exponent}});
    report.solution() = {{"rows", rows}, {"fits", fits}};
    if (!g.json) {
      std::cout << "algorithm        n    median_ms\n";
      for (const auto& r : result.rows) {
        std::printf("%-14s %5zu %12.4f\n", r.algorithm.c_str(), r.n, r.median_ms);
      }
      for (const auto& f : result.fits) std::printf("exponent %-14s %.3f\n", f.algorithm.c_str(), f.exponent);
      g.printed = true;
    }
    return kOk;
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal bridges between embedded trees, and the reductions around them"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  for (int i = 1; i < argc; ++i) g.command.emplace_back(argv[i]);
  app.add_flag("--json", g.json, "print a JSON run report");
  app.add_option("--threads", g.threads, "worker threads for the solvers")->check(CLI::Range(1u, 256u));

  Handler handler;
  auto route = [&](CLI::App* sub, Handler h) { sub->callback([&handler, h] { handler = h; }); };

  // bridge
  auto* bridge = app.add_subcommand("bridge", "one bridge between two trees");
  bridge->require_subcommand(1);
  TreePairArgs exact_args, approx_args;
  auto* exact = bridge->add_subcommand("exact", "optimal bridge");
  add_tree_pair(exact, exact_args);
  route(exact, bridge_handler("exact", exact_args, g));
  auto* approx = bridge->add_subcommand("approx", "closest-pair bridge, within a factor of two");
  add_tree_pair(approx, approx_args);
  route(approx, bridge_handler("approx", approx_args, g));
  DecideArgs decide_args;
  auto* decide = bridge->add_subcommand("decide", "is there a bridge of length c1 with a leaf route of length c2");
  add_tree_pair(decide, decide_args.trees);
  decide->add_option("--c1", decide_args.c1, "bridge length")->required();
  decide->add_option("--c2", decide_args.c2, "route length")->required();
  route(decide, decide_handler(decide_args));

  // forest
  auto* forest = app.add_subcommand("forest", "join several trees");
  forest->require_subcommand(1);
  ForestArgs forest_args;
  auto* connect = forest->add_subcommand("connect", "center-to-center bridges from the best hub");
  connect->add_option("files", forest_args.files, "tree files")->required()->expected(2, -1)->check(CLI::ExistingFile);
  connect->add_option("--emit-dot", forest_args.dot, "write a Graphviz drawing");
  route(connect, forest_handler(forest_args));

  // twin
  auto* twin = app.add_subcommand("twin", "two bridges between two trees");
  twin->require_subcommand(1);
  TwinArgs solve_args, brute_args;
  auto* solve = twin->add_subcommand("solve", "edge-pair and diameter-path solvers");
  add_tree_pair(solve, solve_args.trees);
  route(solve, twin_handler("solve", solve_args, g));
  auto* brute = twin->add_subcommand("brute", "every vertex-disjoint bridge pair");
  add_tree_pair(brute, brute_args.trees);
  brute->add_flag("--force", brute_args.force, "lift the size guard");
  route(brute, twin_handler("brute", brute_args, g));

  // reduce
  auto* reduce = app.add_subcommand("reduce", "hardness constructions");
  reduce->require_subcommand(1);
  ReduceArgs onebridge_args, ksum_args, rdbp_args;
  auto* to_onebridge = reduce->add_subcommand("sat-to-onebridge", "one-in-three SAT to a one-bridge decision");
  to_onebridge->add_option("--sat", onebridge_args.sat, "formula file")->required()->check(CLI::ExistingFile);
  to_onebridge->add_option("--out-dir", onebridge_args.out_dir, "output directory")->required();
  to_onebridge->add_flag("--force", onebridge_args.force, "allow large formulas");
  route(to_onebridge, sat_to_onebridge_handler(onebridge_args));
  auto* to_ksum = reduce->add_subcommand("sat-to-3sum", "one-in-three SAT to 3-SUM (k-SUM with --k)");
  to_ksum->add_option("--sat", ksum_args.sat, "formula file")->required()->check(CLI::ExistingFile);
  to_ksum->add_option("--k", ksum_args.k, "number of summands")->check(CLI::Range(3, 6));
  to_ksum->add_option("--out", ksum_args.out, "write the integers here instead of stdout");
  to_ksum->add_flag("--force", ksum_args.force, "allow large formulas");
  route(to_ksum, sat_to_ksum_handler(ksum_args, g));
  auto* to_rdbp = reduce->add_subcommand("vc-to-rdbp", "planar cubic vertex cover to shortcut insertion");
  to_rdbp->add_option("--graph", rdbp_args.graph, "graph file")->required()->check(CLI::ExistingFile);
  to_rdbp->add_option("--k", rdbp_args.k, "shortcut budget")->required();
  to_rdbp->add_option("--out-dir", rdbp_args.out_dir, "output directory")->required();
  route(to_rdbp, vc_to_rdbp_handler(rdbp_args));

  // verify
  auto* verify = app.add_subcommand("verify", "check a reduction end to end");
  verify->require_subcommand(1);
  ReduceArgs iff1_args, iff3_args, iffr_args;
  auto* iff1 = verify->add_subcommand("iff-onebridge", "SAT, COV and one-bridge agree");
  iff1->add_option("--sat", iff1_args.sat, "formula file")->required()->check(CLI::ExistingFile);
  route(iff1, iff_onebridge_handler(iff1_args));
  auto* iff3 = verify->add_subcommand("iff-3sum", "SAT and 3-SUM (k-SUM with --k) agree");
  iff3->add_option("--sat", iff3_args.sat, "formula file")->required()->check(CLI::ExistingFile);
  iff3->add_option("--k", iff3_args.k, "number of summands")->check(CLI::Range(3, 6));
  iff3->add_flag("--force", iff3_args.force, "allow large formulas");
  route(iff3, iff_ksum_handler(iff3_args));
  auto* iffr = verify->add_subcommand("iff-rdbp", "minimum shortcut budget equals the vertex cover number");
  iffr->add_option("--graph", iffr_args.graph, "graph file")->required()->check(CLI::ExistingFile);
  route(iffr, iff_rdbp_handler(iffr_args));

  // gen
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  GenArgs fig2_args, fig3_args, tree_args, exact_gen_args, sat_args;
  auto* fig2 = gen->add_subcommand("fig2", "greedy worst case");
  fig2->add_option("--n", fig2_args.n, "edge weight")->check(CLI::PositiveNumber);
  fig2->add_option("--eps", fig2_args.eps, "gap, 0 < eps < 1");
  fig2->add_option("--out-dir", fig2_args.out_dir, "output directory")->required();
  fig2->add_option("--emit-dot", fig2_args.dot, "write a Graphviz drawing");
  route(fig2, gen_fig2_handler(fig2_args));
  auto* fig3 = gen->add_subcommand("fig3", "instance whose best twin bridges cross");
  fig3->add_option("--eps", fig3_args.eps, "pendant length, 0 < eps <= 1/10");
  fig3->add_option("--out-dir", fig3_args.out_dir, "output directory")->required();
  fig3->add_option("--emit-dot", fig3_args.dot, "write a Graphviz drawing");
  route(fig3, gen_fig3_handler(fig3_args));
  auto* tree = gen->add_subcommand("tree", "random tree with random-parent attachment");
  tree->add_option("--n", tree_args.n, "vertices")->required();
  tree->add_option("--seed", tree_args.seed, "seed");
  tree->add_option("--bbox", tree_args.bbox, "x0 y0 x1 y1")->expected(4);
  tree->add_option("--out", tree_args.out, "output file");
  route(tree, gen_tree_handler(tree_args, g));
  auto* exact_gen = gen->add_subcommand("exact", "trees on one circle with rational distances");
  exact_gen->add_option("--sizes", exact_gen_args.sizes, "vertices per tree")->required()->delimiter(',');
  exact_gen->add_option("--seed", exact_gen_args.seed, "seed");
  exact_gen->add_option("--out-dir", exact_gen_args.out_dir, "output directory")->required();
  exact_gen->add_option("--emit-dot", exact_gen_args.dot, "write a Graphviz drawing");
  route(exact_gen, gen_exact_handler(exact_gen_args));
  auto* sat = gen->add_subcommand("sat", "random one-in-three formula");
  sat->add_option("--n", sat_args.n, "variables")->required();
  sat->add_option("--m", sat_args.m, "clauses")->required();
  sat->add_option("--seed", sat_args.seed, "seed");
  sat->add_option("--out", sat_args.out, "output file");
  route(sat, gen_sat_handler(sat_args, g));

  // bench
  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the solvers and fit growth exponents");
  bench->add_option("--suite", bench_args.config.suites, "exact, approx, twin")
      ->check(CLI::IsMember({"exact", "approx", "twin"}))
      ->delimiter(',');
  bench->add_option("--sizes", bench_args.config.bridge_sizes, "tree sizes for one bridge")->delimiter(',');
  bench->add_option("--twin-sizes", bench_args.config.twin_sizes, "tree sizes for two bridges")->delimiter(',');
  bench->add_option("--seeds", bench_args.config.seeds, "instance seeds")->delimiter(',');
  bench->add_option("--min-ms", bench_args.config.min_ms, "minimum time per measurement");
  route(bench, bench_handler(bench_args, g));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  std::string path;
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    path += (path.empty() ? "" : " ") + sub->get_name();
  }
  RunReport report(path, g.command);
  int code = kOk;
  try {
    code = handler(report);
  } catch (const bw::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  if (g.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (!g.printed) {
    print_human(report.solution());
  }
  return code;
}
