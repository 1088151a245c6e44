// Prints one PASS/FAIL line per acceptance criterion. Criterion 10 is
// informational. Exit status is non-zero if any gating criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bridgeworks/bridgeworks.hpp"
#include "oracles.hpp"

namespace bw = bridgeworks;
using bw::Rational;
using bw::WeightedTree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 = no limit
  bool gating;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

std::vector<std::pair<WeightedTree, WeightedTree>> bridge_corpus() {
  std::vector<std::pair<WeightedTree, WeightedTree>> out;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    std::vector<std::size_t> sizes{1 + (seed * 7) % 12, 1 + (seed * 11) % 12};
    auto trees = bw::gen_exact_trees(sizes, seed);
    out.emplace_back(trees[0], trees[1]);
  }
  return out;
}

// One-in-three formulas over 4 variables with up to 3 clauses, one per orbit
// under variable permutation and sign flips.
std::vector<bw::OneInThreeSat> small_formula_corpus() {
  constexpr int n = 4;
  std::vector<std::array<int, 3>> clauses;
  std::vector<int> literals;
  for (int v = 1; v <= n; ++v) {
    literals.push_back(-v);
    literals.push_back(v);
  }
  std::sort(literals.begin(), literals.end());
  for (std::size_t i = 0; i < literals.size(); ++i) {
    for (std::size_t j = i; j < literals.size(); ++j) {
      for (std::size_t k = j; k < literals.size(); ++k) {
        clauses.push_back({literals[i], literals[j], literals[k]});
      }
    }
  }
  std::vector<std::function<int(int)>> symmetries;
  std::array<int, n> perm{1, 2, 3, 4};
  do {
    for (int flips = 0; flips < (1 << n); ++flips) {
      symmetries.push_back([perm, flips](int lit) {
        int v = std::abs(lit);
        int image = perm[static_cast<std::size_t>(v - 1)];
        bool flip = (flips >> (v - 1) & 1) != 0;
        return (lit > 0) != flip ? image : -image;
      });
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  using Formula = std::vector<std::array<int, 3>>;
  auto image = [&](const Formula& f, const std::function<int(int)>& s) {
    Formula g;
    for (auto c : f) {
      for (int& lit : c) lit = s(lit);
      std::sort(c.begin(), c.end());
      g.push_back(c);
    }
    std::sort(g.begin(), g.end());
    return g;
  };
  std::vector<bw::OneInThreeSat> out;
  const std::size_t c = clauses.size();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t start, std::size_t left) {
    if (!pick.empty()) {
      Formula f;
      for (std::size_t i : pick) f.push_back(clauses[i]);
      bool canonical = true;
      for (const auto& s : symmetries) {
        if (image(f, s) < f) {
          canonical = false;
          break;
        }
      }
      if (canonical) out.push_back({n, f});
    }
    if (left == 0) return;
    for (std::size_t i = start; i < c; ++i) {
      pick.push_back(i);
      grow(i, left - 1);
      pick.pop_back();
    }
  };
  grow(0, 3);
  return out;
}

std::vector<bw::OneInThreeSat> formula_corpus() {
  std::vector<bw::OneInThreeSat> corpus = small_formula_corpus();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) corpus.push_back(bw::gen_random_sat(6, 4, seed));
  return corpus;
}

Outcome criterion1(const std::vector<std::pair<WeightedTree, WeightedTree>>& corpus) {
  Outcome o;
  int bad = 0;
  for (const auto& [t1, t2] : corpus) {
    auto s = bw::solve_exact<Rational>(t1, t2);
    if (s.value != oracle::bridge_value<Rational>(t1, t2, s.p, s.q)) ++bad;
  }
  o.pass = bad == 0;
  o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome criterion2(const std::vector<std::pair<WeightedTree, WeightedTree>>& corpus) {
  Outcome o;
  Rational worst = 0;
  for (const auto& [t1, t2] : corpus) {
    Rational r = bw::approx_greedy<Rational>(t1, t2).value / bw::solve_exact<Rational>(t1, t2).value;
    worst = std::max(worst, r);
  }
  const long n = 1000;
  const Rational eps(1, 100);
  auto fig = bw::gen_fig2_instance(n, eps);
  Rational exact = bw::solve_exact<Rational>(fig.first, fig.second).value;
  Rational approx = bw::approx_greedy<Rational>(fig.first, fig.second).value;
  Rational ratio = approx / exact;
  bool formulas = exact == 2 * n + 1 && approx == 4 * n + 1 - eps;
  o.pass = worst <= 2 && ratio > Rational(1999, 1000) && formulas;
  o.detail = "worst random ratio " + fmt(worst.get_d()) + "; fig2 n=1000 exact " +
             bw::format_rational(exact) + ", greedy " + bw::format_rational(approx) + ", ratio " +
             fmt(ratio.get_d());
  return o;
}

Outcome criterion3(const std::filesystem::path& dump_dir) {
  Outcome o;
  int mismatches = 0;
  std::set<int> cases;
  std::filesystem::create_directories(dump_dir);
  std::ostringstream summary;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    std::vector<std::size_t> sizes{2 + seed % 6, 2 + (seed * 5) % 6};
    auto trees = bw::gen_exact_trees(sizes, seed);
    auto s = bw::solve_twin<Rational>(trees[0], trees[1]);
    auto b = bw::brute_force_twin<Rational>(trees[0], trees[1]);
    if (s.value == b.value) continue;
    ++mismatches;
    cases.insert(b.dominant_case);
    auto stem = dump_dir / ("twin_seed" + std::to_string(seed));
    bw::write_file(stem.string() + "_t1.txt", bw::serialize_graph(trees[0]));
    bw::write_file(stem.string() + "_t2.txt", bw::serialize_graph(trees[1]));
    summary << "seed " << seed << ": solver " << bw::format_rational(s.value) << " via (" << s.bridges.p1
            << "," << s.bridges.q1 << "),(" << s.bridges.p2 << "," << s.bridges.q2
            << "); brute " << bw::format_rational(b.value) << " via (" << b.bridges.p1 << ","
            << b.bridges.q1 << "),(" << b.bridges.p2 << "," << b.bridges.q2 << ") case "
            << b.dominant_case << "\n";
  }
  bw::write_file(dump_dir / "twin_mismatches.txt", summary.str());
  o.pass = mismatches == 0;
  o.detail = "300 instances, " + std::to_string(mismatches) + " where brute force beats the solver";
  if (mismatches > 0) o.detail += " (instances dumped to " + dump_dir.string() + ")";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Rational eps(1, 100);
  auto fig = bw::gen_fig3_instance(eps);
  const auto& t1 = fig.first;
  const auto& t2 = fig.second;
  auto find = [](const WeightedTree& t, const std::string& label) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.label(i) == label) return i;
    }
    throw std::logic_error(label);
  };
  std::size_t a = find(t1, "a"), b = find(t1, "b"), c = find(t2, "c"), d = find(t2, "d");
  auto s = bw::solve_twin<double>(t1, t2);
  double bc = bw::euclidean_distance(t1.point(b), t2.point(c)).to_double();
  double bd = bw::euclidean_distance(t1.point(b), t2.point(d)).to_double();
  double alternative = bw::evaluate_constrained_diameter<double>(t1, t2, {a, c, b, d}).value;
  const double e = eps.get_d();
  bool crossing = s.intersecting;
  bool value = bw::Arith<double>::equal(s.value, bc + 2 * e);
  bool below = bw::Arith<double>::less(s.value, alternative);
  o.pass = crossing && value && below;
  o.detail = std::string("intersecting=") + (crossing ? "true" : "false") + ", value " + fmt(s.value) +
             " vs |bc|+2eps " + fmt(bc + 2 * e) + (value ? " (match)" : " (no match)") +
             ", non-crossing alternative " + fmt(alternative) + " (|bd|+2eps " + fmt(bd + 2 * e) + ")" +
             (below ? ", strictly above the optimum" : ", not above the optimum");
  return o;
}

Outcome criterion5(const std::vector<bw::OneInThreeSat>& corpus, std::size_t exhaustive) {
  Outcome o;
  int disagree = 0, sat = 0;
  for (const auto& phi : corpus) {
    auto r = bw::verify_one_bridge_iff(phi);
    if (!r.agree()) ++disagree;
    if (r.satisfiable) ++sat;
  }
  o.pass = disagree == 0;
  o.detail = std::to_string(exhaustive) + " orbit representatives + " +
             std::to_string(corpus.size() - exhaustive) + " random, " + std::to_string(sat) +
             " satisfiable, " + std::to_string(disagree) + " disagreements";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t tails = 0;
  for (std::size_t m = 1; m <= 40; ++m) tails += bw::power_tail_violations(m);
  std::mt19937_64 rng(2024);
  int overshoot = 0, undershoot = 0;
  for (int round = 0; round < 1000; ++round) {
    for (std::uint8_t common : {0, 1}) {
      const std::size_t m = 1 + bw::uniform_below(rng, 40);
      const std::size_t first = bw::uniform_below(rng, m);
      bw::TernaryVector u(m), v(m);
      for (std::size_t i = 0; i < m; ++i) {
        if (i < first) {
          u[i] = static_cast<std::uint8_t>(bw::uniform_below(rng, 2));
          v[i] = static_cast<std::uint8_t>(1 - u[i]);
        } else if (i == first) {
          u[i] = v[i] = common;
        } else {
          u[i] = static_cast<std::uint8_t>(bw::uniform_below(rng, 2));
          v[i] = static_cast<std::uint8_t>(bw::uniform_below(rng, 2));
        }
      }
      Rational sum = bw::path_depth(u) + bw::path_depth(v);
      Rational c = bw::reduction_params(m).c;
      if (common == 0 && !(sum > c)) ++overshoot;
      if (common == 1 && !(sum < c)) ++undershoot;
    }
  }
  o.pass = tails == 0 && overshoot == 0 && undershoot == 0;
  o.detail = "violations: power tails " + std::to_string(tails) + " (m<=40), common 0 not above C " +
             std::to_string(overshoot) + "/1000, common 1 not below C " + std::to_string(undershoot) + "/1000";
  return o;
}

Outcome criterion7(const std::vector<bw::OneInThreeSat>& corpus) {
  Outcome o;
  int disagree = 0;
  for (const auto& phi : corpus) {
    bool sat = bw::one_in_three_sat_brute_force(phi).has_value();
    auto inst = bw::sat_to_threesum(phi);
    auto w = bw::threesum_brute_force(inst.values);
    bool witness = false;
    if (w) {
      for (std::size_t i : *w) witness = witness || inst.values[i] == -bw::repunit(inst.digits);
    }
    if (sat != witness) ++disagree;
  }
  std::vector<int> two{0, 2}, one{0, 1};
  bw::BigInt carry = 5 * bw::from_digits(two) + bw::from_digits(one);
  bool demo = bw::to_digits(carry, 2) == std::vector<int>{1, 1};
  o.pass = disagree == 0 && demo;
  o.detail = std::to_string(corpus.size()) + " formulas, " + std::to_string(disagree) +
             " disagreements; 02*5 + 01 = " + carry.get_str();
  return o;
}

Outcome criterion8(const std::string& data) {
  Outcome o;
  std::ostringstream detail;
  bool ok = true;
  for (const char* name : {"k4", "prism"}) {
    auto g = bw::load_graph(data + "/" + name + ".txt");
    auto inst = bw::vc_to_rdbp(g, 0);
    std::size_t budget = bw::rdbp_min_budget(inst);
    std::size_t cover = bw::vertex_cover_brute_force(g, g.size())->size();
    bool plane = bw::validate_planar(inst.graph).empty();
    std::size_t before = inst.graph.max_degree();
    auto all = inst.graph.with_edges(inst.candidates);
    bool plane_after = bw::validate_planar(all).empty();
    std::size_t after = all.max_degree();
    ok = ok && budget == cover && plane && before <= 4 && plane_after && after <= 5;
    if (std::string(name) == "k4") ok = ok && cover == 3;
    detail << name << ": budget " << budget << ", cover " << cover << ", degree " << before << "->"
           << after << (plane && plane_after ? ", plane" : ", NOT plane") << "; ";
  }
  o.pass = ok;
  o.detail = detail.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  double worst = 0;
  int bad = 0;
  for (int round = 0; round < 200; ++round) {
    std::size_t k = 3 + bw::uniform_below(rng, 2);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < k; ++i) sizes.push_back(1 + bw::uniform_below(rng, 6));
    auto trees = bw::gen_exact_trees(sizes, static_cast<std::uint64_t>(round) + 1);
    auto c = bw::connect_forest<Rational>(trees);
    double opt = oracle::forest_optimum(trees);
    double ratio = opt > 0 ? c.diameter.get_d() / opt : 1.0;
    worst = std::max(worst, ratio);
    if (ratio > 4 * (1 + 1e-12)) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "200 forests, worst ratio " + fmt(worst);
  return o;
}

Outcome criterion10() {
  Outcome o;
  bw::BenchReport report = bw::run_bench({});
  std::ostringstream detail;
  double exact = 0, approx = 0, twin = 0;
  for (const auto& fit : report.fits) {
    detail << fit.algorithm << " " << fmt(fit.exponent) << "; ";
    if (fit.algorithm == "exact") exact = fit.exponent;
    if (fit.algorithm == "approx") approx = fit.exponent;
    if (fit.algorithm == "twin") twin = fit.exponent;
  }
  o.pass = exact >= 1.6 && exact <= 2.6 && approx < exact && twin >= 3.2 && twin <= 4.8;
  o.detail = detail.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string dump_dir = "acceptance_dumps";
  std::string data = BRIDGEWORKS_TEST_DATA;
  bool skip_bench = false;
  app.add_option("--dump-dir", dump_dir, "where mismatching instances are written");
  app.add_option("--data", data, "test data directory");
  app.add_flag("--skip-bench", skip_bench, "skip the informational complexity check");
  CLI11_PARSE(app, argc, argv);

  const auto bridges = bridge_corpus();
  const auto formulas = formula_corpus();
  const std::size_t exhaustive = formulas.size() - 200;

  std::vector<Criterion> criteria{
      {1, "optimal-bridge oracle equivalence", 10, true, [&] { return criterion1(bridges); }},
      {2, "approximation factor", 5, true, [&] { return criterion2(bridges); }},
      {3, "twin-bridge correctness", 60, true, [&] { return criterion3(dump_dir); }},
      {4, "intersecting optimum", 1, true, criterion4},
      {5, "three-way iff", 120, true, [&] { return criterion5(formulas, exhaustive); }},
      {6, "depth-sum inequalities", 10, true, criterion6},
      {7, "3-SUM iff", 60, true, [&] { return criterion7(formulas); }},
      {8, "RDBP iff", 30, true, [&] { return criterion8(data); }},
      {9, "forest connection", 60, true, criterion9},
      {10, "complexity smoke test", 0, false, criterion10},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (c.id == 10 && skip_bench) {
      std::cout << "[SKIP] " << c.id << " " << c.name << "\n";
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_s == 0 || seconds < c.limit_s;
    bool pass = o.pass && in_time;
    std::string tag = pass ? "PASS" : (c.gating ? "FAIL" : "INFO");
    std::cout << "[" << tag << "] " << c.id << " " << c.name << ": " << o.detail << " (" << fmt(seconds)
              << " s" << (c.limit_s > 0 ? ", limit " + fmt(c.limit_s) + " s" : "") << ")"
              << (c.gating ? "" : " [non-gating]") << "\n";
    if (c.gating && !pass) all = false;
  }
  return all ? 0 : 1;
}
