#include "bridgeworks/reductions/cov.hpp"

#include <algorithm>
#include <string>

namespace bridgeworks {

bool is_binary(const TernaryVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t d) { return d <= 1; });
}

void CovInstance::validate() const {
  for (const auto* side : {&a, &b}) {
    for (const TernaryVector& v : *side) {
      if (v.size() != dimension) throw InputError("vector dimension mismatch");
      for (std::uint8_t d : v) {
        if (d > 2) throw InputError("vector entry outside {0, 1, 2}");
      }
    }
  }
}

namespace {

std::uint8_t cov_digit(std::size_t true_count) {
  if (true_count == 1) return 0;
  if (true_count == 0) return 1;
  return 2;
}

void fill_side(const OneInThreeSat& phi, const std::vector<std::size_t>& part,
               std::vector<TernaryVector>& out, std::vector<std::uint64_t>& masks) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << part.size()); ++mask) {
    TernaryVector v;
    v.reserve(phi.clauses.size());
    for (const auto& clause : phi.clauses) {
      v.push_back(cov_digit(partial_true_literals(clause, part, mask)));
    }
    out.push_back(std::move(v));
    masks.push_back(mask);
  }
}

}  // namespace

CovInstance sat_to_cov(const OneInThreeSat& phi, bool force) {
  phi.validate();
  check_blowup(phi.variables, force);
  CovInstance inst;
  inst.dimension = phi.clauses.size();
  inst.partition = partition_variables(phi);
  fill_side(phi, inst.partition->first, inst.a, inst.masks_a);
  fill_side(phi, inst.partition->second, inst.b, inst.masks_b);
  return inst;
}

std::optional<std::pair<std::size_t, std::size_t>> cov_brute_force(const CovInstance& inst) {
  inst.validate();
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    if (!is_binary(inst.a[i])) continue;
    for (std::size_t j = 0; j < inst.b.size(); ++j) {
      if (!is_binary(inst.b[j])) continue;
      bool complementary = true;
      for (std::size_t k = 0; k < inst.dimension && complementary; ++k) {
        complementary = inst.a[i][k] + inst.b[j][k] == 1;
      }
      if (complementary) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

namespace {

Rational third_power(std::size_t e) {
  Rational r(1);
  for (std::size_t i = 0; i < e; ++i) r /= 3;
  return r;
}

}  // namespace

OneBridgeReductionParams reduction_params(std::size_t m) {
  OneBridgeReductionParams p;
  p.m = m;
  p.c = Rational(3, 2) * (Rational(1) - third_power(m));
  p.c1 = 0;
  p.c2 = p.c + 2;
  return p;
}

Rational segment_length_for(std::uint8_t digit, std::size_t i) {
  switch (digit) {
    case 0:
      return third_power(i - 1);
    case 1:
      return Rational(0);
    case 2:
      return Rational(4);
    default:
      throw InputError("vector entry outside {0, 1, 2}");
  }
}

Rational path_depth(const TernaryVector& v) {
  Rational sum(0);
  for (std::size_t i = 0; i < v.size(); ++i) sum += segment_length_for(v[i], i + 1);
  return sum;
}

namespace {

struct TreeBuilder {
  std::vector<Point> points;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> labels;

  std::size_t add(Point p, std::string label) {
    points.push_back(std::move(p));
    labels.push_back(std::move(label));
    return points.size() - 1;
  }
};

// side = +1 builds T1 (paths run downward from height C), -1 builds T2.
WeightedTree build_side(const std::vector<TernaryVector>& vectors, const Rational& c, int side,
                        std::vector<std::size_t>& endpoints, const std::string& prefix) {
  TreeBuilder b;
  const Rational root_y = side > 0 ? c : Rational(0);
  const Rational anchor_y = side > 0 ? c + 1 : Rational(-1);
  const std::size_t root = b.add({Rational(side), root_y}, "root");
  const std::size_t anchor = b.add({Rational(side), anchor_y}, "anchor");
  b.edges.push_back({anchor, root, Rational(1)});
  long star = 2;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const TernaryVector& v = vectors[k];
    const bool straight = is_binary(v);
    const Rational x = straight ? Rational(side) : Rational(side * star++);
    Rational depth(0);
    std::size_t prev = root;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational len = segment_length_for(v[i], i + 1);
      depth += len;
      const bool last = i + 1 == v.size();
      Point p{last && straight ? Rational(0) : x, side > 0 ? c - depth : depth};
      std::size_t cur = b.add(std::move(p), prefix + std::to_string(k) + "." + std::to_string(i + 1));
      b.edges.push_back({prev, cur, std::move(len)});
      prev = cur;
    }
    endpoints.push_back(prev);
  }
  return WeightedTree(std::move(b.points), std::move(b.edges), std::move(b.labels));
}

}  // namespace

OneBridgeReduction cov_to_one_bridge(const CovInstance& inst) {
  inst.validate();
  if (inst.dimension == 0) throw InputError("vectors must have at least one entry");
  OneBridgeReductionParams params = reduction_params(inst.dimension);
  std::vector<std::size_t> ends_a;
  std::vector<std::size_t> ends_b;
  WeightedTree t1 = build_side(inst.a, params.c, 1, ends_a, "u");
  WeightedTree t2 = build_side(inst.b, params.c, -1, ends_b, "v");
  return {std::move(t1), std::move(t2), std::move(params), std::move(ends_a), std::move(ends_b)};
}

OneBridgeIffReport verify_one_bridge_iff(const OneInThreeSat& phi) {
  OneBridgeIffReport report;
  report.assignment = one_in_three_sat_brute_force(phi);
  report.satisfiable = report.assignment.has_value();
  CovInstance inst = sat_to_cov(phi);
  report.cov_pair = cov_brute_force(inst);
  report.cov = report.cov_pair.has_value();
  if (inst.dimension == 0) {
    // No clauses: every assignment works and every pair is trivially complementary.
    report.bridge = true;
    return report;
  }
  OneBridgeReduction red = cov_to_one_bridge(inst);
  report.bridge_witness =
      one_bridge_decide<Rational>(red.t1, red.t2, red.params.c1, red.params.c2);
  report.bridge = report.bridge_witness.has_value();
  return report;
}

std::size_t power_tail_violations(std::size_t m) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Rational tail(0);
    for (std::size_t j = i + 1; j < m; ++j) tail += third_power(j);
    if (third_power(i) <= tail) ++bad;
  }
  return bad;
}

}  // namespace bridgeworks
