#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bridgeworks/bridgeworks.hpp"
#include "oracles.hpp"

namespace bw = bridgeworks;
using bw::BigInt;
using bw::OneInThreeSat;
using bw::Rational;
using bw::TernaryVector;

namespace {

const std::string kData = BRIDGEWORKS_TEST_DATA;

OneInThreeSat single_clause() { return {3, {{1, 2, 3}}}; }
OneInThreeSat contradiction() { return {1, {{1, 1, 1}, {-1, -1, -1}}}; }

std::vector<std::optional<bool>> part_values(const bw::VariablePartition& p,
                                             const std::vector<std::size_t>& part,
                                             std::uint64_t mask) {
  std::vector<std::optional<bool>> values(p.variables + 1);
  for (std::size_t k = 0; k < part.size(); ++k) values[part[k]] = (mask >> k & 1) != 0;
  return values;
}

// Second complementary-pair scan: complement b once, then search a.
bool cov_rescan(const bw::CovInstance& inst) {
  std::set<TernaryVector> wanted;
  for (const auto& v : inst.b) {
    if (std::any_of(v.begin(), v.end(), [](std::uint8_t d) { return d > 1; })) continue;
    TernaryVector flipped(v.size());
    std::transform(v.begin(), v.end(), flipped.begin(), [](std::uint8_t d) { return 1 - d; });
    wanted.insert(flipped);
  }
  return std::any_of(inst.a.begin(), inst.a.end(), [&](const TernaryVector& u) { return wanted.count(u) > 0; });
}

bw::PlanarGraph k4() { return bw::load_graph(kData + "/k4.txt"); }
bw::PlanarGraph prism() { return bw::load_graph(kData + "/prism.txt"); }

bool is_cover(const bw::EmbeddedGraph& g, const std::vector<std::size_t>& chosen) {
  std::vector<bool> in(g.size(), false);
  for (std::size_t v : chosen) in[v] = true;
  for (const auto& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

}  // namespace

TEST(OneInThreeSat, SingleClause) {
  auto a = bw::one_in_three_sat_brute_force(single_clause());
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, (bw::Assignment{true, false, false}));
}

TEST(OneInThreeSat, RepeatedLiteralIsUnsatisfiable) {
  EXPECT_FALSE(bw::one_in_three_sat_brute_force({1, {{1, 1, 1}}}).has_value());
  EXPECT_FALSE(bw::one_in_three_sat_brute_force(contradiction()).has_value());
}

TEST(OneInThreeSat, CountsOccurrences) {
  EXPECT_EQ(bw::true_literals({1, 1, -2}, {true, true}), 2u);
  EXPECT_EQ(bw::true_literals({-1, 2, -2}, {true, false}), 1u);
}

TEST(OneInThreeSat, AgreesWithBacktracking) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto phi = bw::gen_random_sat(2 + seed % 9, 1 + seed % 7, seed);
    auto brute = bw::one_in_three_sat_brute_force(phi);
    EXPECT_EQ(brute.has_value(), oracle::one_in_three_satisfiable(phi)) << seed;
    if (brute) {
      for (const auto& clause : phi.clauses) EXPECT_EQ(bw::true_literals(clause, *brute), 1u);
    }
  }
}

TEST(OneInThreeSat, Validation) {
  EXPECT_THROW((OneInThreeSat{2, {{1, 0, 2}}}.validate()), bw::InputError);
  EXPECT_THROW((OneInThreeSat{2, {{1, 3, 2}}}.validate()), bw::InputError);
  EXPECT_THROW(bw::check_blowup(25, false), bw::InputError);
  EXPECT_NO_THROW(bw::check_blowup(25, true));
  EXPECT_NO_THROW(bw::check_blowup(24, false));
}

TEST(Partition, HalvesWithPadding) {
  auto even = bw::partition_variables({4, {{1, 2, 3}}});
  EXPECT_EQ(even.first, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(even.second, (std::vector<std::size_t>{3, 4}));
  EXPECT_FALSE(even.padded);
  auto odd = bw::partition_variables(single_clause());
  EXPECT_TRUE(odd.padded);
  EXPECT_EQ(odd.variables, 4u);
  EXPECT_EQ(odd.second, (std::vector<std::size_t>{3, 4}));
}

TEST(SatToCov, SingleClauseWithDummy) {
  OneInThreeSat phi{4, {{1, 2, 3}}};
  auto inst = bw::sat_to_cov(phi);
  EXPECT_EQ(inst.dimension, 1u);
  EXPECT_EQ(inst.a.size(), 4u);
  EXPECT_EQ(inst.b.size(), 4u);
  // x1 = T, x2 = F is mask 1 over V_A = {x1, x2}.
  std::size_t i = std::find(inst.masks_a.begin(), inst.masks_a.end(), 1u) - inst.masks_a.begin();
  auto values = part_values(*inst.partition, inst.partition->first, 1);
  EXPECT_EQ(inst.a[i][0], oracle::cov_entry(phi.clauses[0], values));
  EXPECT_EQ(inst.a[i][0], 0);
}

TEST(SatToCov, SizesAndEntriesMatchSecondImplementation) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto phi = bw::gen_random_sat(1 + seed % 10, 1 + seed % 6, seed);
    auto inst = bw::sat_to_cov(phi);
    const auto& part = *inst.partition;
    EXPECT_EQ(part.variables % 2, 0u);
    EXPECT_EQ(inst.a.size(), std::size_t{1} << (part.variables / 2));
    EXPECT_EQ(inst.b.size(), inst.a.size());
    for (std::size_t i = 0; i < inst.a.size(); ++i) {
      auto va = part_values(part, part.first, inst.masks_a[i]);
      auto vb = part_values(part, part.second, inst.masks_b[i]);
      for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
        ASSERT_EQ(inst.a[i][c], oracle::cov_entry(phi.clauses[c], va));
        ASSERT_EQ(inst.b[i][c], oracle::cov_entry(phi.clauses[c], vb));
      }
    }
  }
}

TEST(SatToCov, BlowupGuard) {
  OneInThreeSat phi{25, {{1, 2, 3}}};
  EXPECT_THROW(bw::sat_to_cov(phi), bw::InputError);
}

TEST(SatToCov, SatisfiableIffComplementaryPair) {
  int yes = 0, no = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto phi = bw::gen_random_sat(2 + seed % 9, 1 + seed % 6, seed);
    bool sat = oracle::one_in_three_satisfiable(phi);
    EXPECT_EQ(bw::cov_brute_force(bw::sat_to_cov(phi)).has_value(), sat) << seed;
    ++(sat ? yes : no);
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(CovBruteForce, Examples) {
  bw::CovInstance yes{3, {{0, 1, 0}}, {{1, 0, 1}}, std::nullopt, {}, {}};
  EXPECT_TRUE(bw::cov_brute_force(yes).has_value());
  bw::CovInstance no{3, {{0, 1, 2}}, {{1, 0, 1}}, std::nullopt, {}, {}};
  EXPECT_FALSE(bw::cov_brute_force(no).has_value());
  bw::CovInstance bad{2, {{0, 3}}, {{1, 0}}, std::nullopt, {}, {}};
  EXPECT_THROW(bad.validate(), bw::InputError);
}

TEST(CovBruteForce, AgreesWithRescan) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 500; ++round) {
    bw::CovInstance inst;
    inst.dimension = 1 + bw::uniform_below(rng, 4);
    auto vec = [&] {
      TernaryVector v(inst.dimension);
      // Mostly binary so that matches happen.
      for (auto& d : v) d = static_cast<std::uint8_t>(bw::uniform_below(rng, 7) == 0 ? 2 : bw::uniform_below(rng, 2));
      return v;
    };
    for (std::uint64_t i = 0, n = 1 + bw::uniform_below(rng, 6); i < n; ++i) inst.a.push_back(vec());
    for (std::uint64_t i = 0, n = 1 + bw::uniform_below(rng, 6); i < n; ++i) inst.b.push_back(vec());
    auto found = bw::cov_brute_force(inst);
    EXPECT_EQ(found.has_value(), cov_rescan(inst));
    if (found) {
      const auto& u = inst.a[found->first];
      const auto& v = inst.b[found->second];
      for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(u[i] + v[i], 1);
    }
  }
}

TEST(OneBridgeReduction, ParameterC) {
  EXPECT_EQ(bw::reduction_params(3).c, Rational(13, 9));
  for (std::size_t m = 1; m <= 30; ++m) {
    auto p = bw::reduction_params(m);
    Rational third(1, 3), power(1);
    for (std::size_t i = 0; i < m; ++i) power *= third;
    EXPECT_EQ(p.c, Rational(3, 2) * (1 - power));
    EXPECT_LT(p.c, Rational(3, 2));
    EXPECT_EQ(p.c1, 0);
    EXPECT_EQ(p.c2, p.c + 2);
  }
}

TEST(OneBridgeReduction, ComplementaryPairMeets) {
  bw::CovInstance inst{2, {{0, 1}}, {{1, 0}}, std::nullopt, {}, {}};
  auto red = bw::cov_to_one_bridge(inst);
  EXPECT_EQ(red.params.c, Rational(4, 3));
  EXPECT_EQ(bw::path_depth(inst.a[0]), 1);
  EXPECT_EQ(bw::path_depth(inst.b[0]), Rational(1, 3));
  EXPECT_EQ(red.t1.point(red.endpoints_a[0]), red.t2.point(red.endpoints_b[0]));
  auto w = bw::one_bridge_decide<Rational>(red.t1, red.t2, red.params.c1, red.params.c2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->p, red.endpoints_a[0]);
  EXPECT_EQ(w->q, red.endpoints_b[0]);
}

TEST(OneBridgeReduction, TreesAreExactAndWellFormed) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto phi = bw::gen_random_sat(2 + seed % 7, 1 + seed % 5, seed);
    auto red = bw::cov_to_one_bridge(bw::sat_to_cov(phi));
    EXPECT_TRUE(red.t1.all_lengths_exact());
    EXPECT_TRUE(red.t2.all_lengths_exact());
    for (const auto* t : {&red.t1, &red.t2}) {
      for (const auto& e : t->edges()) {
        Rational len = e.length.rational();
        EXPECT_TRUE(len == 0 || len == 1 || len == 4 || (len < 1 && len > 0)) << len;
      }
    }
  }
}

TEST(OneBridgeReduction, StarPathsCannotWitness) {
  TernaryVector v{0, 2, 1};
  EXPECT_GE(bw::path_depth(v), 4);
  EXPECT_LT(bw::reduction_params(3).c2, Rational(7, 2));
  bw::CovInstance inst{3, {v}, {{1, 2, 0}}, std::nullopt, {}, {}};
  auto red = bw::cov_to_one_bridge(inst);
  EXPECT_FALSE(bw::one_bridge_decide<Rational>(red.t1, red.t2, red.params.c1, red.params.c2));
}

TEST(OneBridgeReduction, CoincidenceOnlyForComplementaryEndpoints) {
  bw::CovInstance inst{2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                       std::nullopt, {}, {}};
  auto red = bw::cov_to_one_bridge(inst);
  for (std::size_t p = 0; p < red.t1.size(); ++p) {
    for (std::size_t q = 0; q < red.t2.size(); ++q) {
      if (red.t1.point(p) != red.t2.point(q)) continue;
      auto ia = std::find(red.endpoints_a.begin(), red.endpoints_a.end(), p);
      auto ib = std::find(red.endpoints_b.begin(), red.endpoints_b.end(), q);
      ASSERT_NE(ia, red.endpoints_a.end());
      ASSERT_NE(ib, red.endpoints_b.end());
      const auto& u = inst.a[static_cast<std::size_t>(ia - red.endpoints_a.begin())];
      const auto& v = inst.b[static_cast<std::size_t>(ib - red.endpoints_b.begin())];
      EXPECT_EQ(bw::path_depth(u) + bw::path_depth(v), red.params.c);
    }
  }
}

TEST(DepthSums, OneThirdPowersDominateTails) {
  for (std::size_t m = 1; m <= 40; ++m) EXPECT_EQ(bw::power_tail_violations(m), 0u);
}

TEST(DepthSums, CommonZeroOverflowsCommonOneFallsShort) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t m = 1 + bw::uniform_below(rng, 20);
    const std::size_t first = bw::uniform_below(rng, m);
    for (std::uint8_t common : {0, 1}) {
      TernaryVector u(m), v(m);
      for (std::size_t i = 0; i < m; ++i) {
        if (i < first) {
          u[i] = static_cast<std::uint8_t>(bw::uniform_below(rng, 2));
          v[i] = 1 - u[i];
        } else if (i == first) {
          u[i] = v[i] = common;
        } else {
          u[i] = static_cast<std::uint8_t>(bw::uniform_below(rng, 2));
          v[i] = static_cast<std::uint8_t>(bw::uniform_below(rng, 2));
        }
      }
      Rational sum = bw::path_depth(u) + bw::path_depth(v);
      Rational c = bw::reduction_params(m).c;
      if (common == 0) {
        EXPECT_GT(sum, c);
      } else {
        EXPECT_LT(sum, c);
      }
    }
  }
}

TEST(VerifyOneBridgeIff, Examples) {
  auto yes = bw::verify_one_bridge_iff(single_clause());
  EXPECT_TRUE(yes.satisfiable && yes.cov && yes.bridge);
  auto no = bw::verify_one_bridge_iff(contradiction());
  EXPECT_FALSE(no.satisfiable || no.cov || no.bridge);
}

TEST(VerifyOneBridgeIff, RandomFormulasAgree) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto report = bw::verify_one_bridge_iff(bw::gen_random_sat(6, 4, seed));
    EXPECT_TRUE(report.agree()) << seed;
  }
}

TEST(ThreeSum, Repunit) {
  EXPECT_EQ(bw::repunit(4), 1111);
  EXPECT_EQ(bw::repunit(1), 1);
  EXPECT_EQ(bw::repunit(30), BigInt("111111111111111111111111111111"));
}

TEST(ThreeSum, BruteForceExamples) {
  std::vector<BigInt> s{1, -1, 0};
  auto w = bw::threesum_brute_force(s);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::array<std::size_t, 3>{0, 1, 2}));
  std::vector<BigInt> none{1, 2, 4};
  EXPECT_FALSE(bw::threesum_brute_force(none).has_value());
  // Distinct positions, equal values.
  std::vector<BigInt> dup{2, -1, -1};
  EXPECT_TRUE(bw::threesum_brute_force(dup).has_value());
}

TEST(ThreeSum, InstanceShape) {
  auto phi = bw::gen_random_sat(6, 4, 3);
  auto inst = bw::sat_to_threesum(phi);
  EXPECT_EQ(inst.digits, 6u);
  EXPECT_EQ(inst.values.size(), inst.a_count + inst.b_count + 1);
  EXPECT_EQ(inst.values.back(), -bw::repunit(6));
  for (const auto& v : inst.values) EXPECT_LE(abs(v), bw::repunit(6) * 3);
}

TEST(ThreeSum, DigitAuditOfEveryPair) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto phi = bw::gen_random_sat(2 + seed % 7, 1 + seed % 5, seed);
    auto inst = bw::sat_to_threesum(phi);
    const auto& part = *inst.partition;
    const BigInt target = bw::repunit(inst.digits);
    for (std::size_t i = 0; i < inst.a_count; ++i) {
      for (std::size_t j = 0; j < inst.b_count; ++j) {
        const BigInt& u = inst.values[i];
        const BigInt& v = inst.values[inst.a_count + j];
        auto du = bw::to_digits(u, inst.digits);
        auto dv = bw::to_digits(v, inst.digits);
        bool every_digit_one = true;
        for (std::size_t d = 0; d < inst.digits; ++d) {
          EXPECT_LE(du[d] + dv[d], 4);
          if (du[d] + dv[d] != 1) every_digit_one = false;
        }
        EXPECT_EQ(u + v == target, every_digit_one);
        // Every digit 1 iff the joint assignment satisfies the formula.
        bw::Assignment joint(part.variables, false);
        for (std::size_t k = 0; k < part.first.size(); ++k) joint[part.first[k] - 1] = (i >> k & 1) != 0;
        for (std::size_t k = 0; k < part.second.size(); ++k) joint[part.second[k] - 1] = (j >> k & 1) != 0;
        bool satisfied = std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
          return bw::true_literals(c, joint) == 1;
        });
        EXPECT_EQ(every_digit_one, satisfied) << seed;
      }
    }
  }
}

TEST(ThreeSum, SatisfiableIffWitnessWithRepunit) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto phi = bw::gen_random_sat(2 + seed % 9, 1 + seed % 6, seed);
    auto inst = bw::sat_to_threesum(phi);
    auto w = bw::threesum_brute_force(inst.values);
    bool sat = oracle::one_in_three_satisfiable(phi);
    EXPECT_EQ(w.has_value(), sat) << seed;
    if (w) EXPECT_EQ((*w)[2], inst.values.size() - 1);
  }
}

TEST(KSum, ThreeMatchesThreeSum) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto phi = bw::gen_random_sat(2 * (1 + seed % 4), 1 + seed % 5, seed);
    auto three = bw::sat_to_threesum(phi);
    auto k = bw::sat_to_ksum(phi, 3);
    ASSERT_EQ(k.parts.size(), 2u);
    std::vector<BigInt> a(three.values.begin(), three.values.begin() + static_cast<long>(three.a_count));
    std::vector<BigInt> b(three.values.begin() + static_cast<long>(three.a_count), three.values.end() - 1);
    EXPECT_EQ(k.parts[0], a);
    EXPECT_EQ(k.parts[1], b);
    EXPECT_EQ(k.target, three.values.back());
  }
}

TEST(KSum, CarryDemonstration) {
  std::vector<int> two{0, 2}, one{0, 1};
  BigInt sum = 5 * bw::from_digits(two) + bw::from_digits(one);
  EXPECT_EQ(sum, 11);
  EXPECT_EQ(bw::to_digits(sum, 2), (std::vector<int>{1, 1}));
  // With five or fewer addends of digits at most 2 no digit reaches 10.
  EXPECT_LT(5 * 2, 10 + 1);
}

TEST(KSum, Validation) {
  EXPECT_THROW(bw::sat_to_ksum(single_clause(), 2), bw::InputError);
  EXPECT_THROW(bw::sat_to_ksum(single_clause(), 7), bw::InputError);
}

TEST(KSum, GroupsAndTarget) {
  auto phi = bw::gen_random_sat(7, 3, 1);
  auto k = bw::sat_to_ksum(phi, 4);
  ASSERT_EQ(k.groups.size(), 3u);
  for (const auto& g : k.groups) EXPECT_LE(g.size(), 3u);
  EXPECT_EQ(k.digits, 3u + 3u);
  EXPECT_EQ(k.target, -bw::repunit(6));
}

TEST(KSum, SatisfiableIffWitness) {
  for (std::size_t kk = 3; kk <= 6; ++kk) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto phi = bw::gen_random_sat(3 + seed % 6, 1 + seed % 5, seed * 10 + kk);
      auto inst = bw::sat_to_ksum(phi, kk);
      EXPECT_EQ(bw::ksum_brute_force(inst).has_value(), oracle::one_in_three_satisfiable(phi))
          << "k=" << kk << " seed=" << seed;
    }
  }
}

TEST(VertexCover, Examples) {
  bw::PlanarGraph edge({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}, {{0, 1}});
  auto c = bw::vertex_cover_brute_force(edge, 2);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 1u);
  auto kc = bw::vertex_cover_brute_force(k4(), 4);
  ASSERT_TRUE(kc.has_value());
  EXPECT_EQ(kc->size(), 3u);
  EXPECT_FALSE(bw::vertex_cover_brute_force(k4(), 2).has_value());
  auto pc = bw::vertex_cover_brute_force(prism(), 6);
  ASSERT_TRUE(pc.has_value());
  EXPECT_EQ(pc->size(), oracle::min_vertex_cover(prism()));
  EXPECT_TRUE(is_cover(prism(), *pc));
}

TEST(Rdbp, GraphChecks) {
  EXPECT_TRUE(bw::is_two_connected(k4()));
  EXPECT_TRUE(bw::is_two_connected(prism()));
  bw::PlanarGraph path({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(0)}},
                       {{0, 1}, {1, 2}});
  EXPECT_FALSE(bw::is_two_connected(path));
  EXPECT_GT(bw::min_feature_distance(k4()), 0);
}

TEST(Rdbp, RejectsBadInput) {
  bw::PlanarGraph square({{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                          {Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_THROW(bw::vc_to_rdbp(square, 2), bw::InputError);
  // K4 drawn with crossing diagonals.
  bw::PlanarGraph crossed({{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                           {Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
                          {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  EXPECT_THROW(bw::vc_to_rdbp(crossed, 2), bw::InputError);
}

TEST(Rdbp, K4Gadget) {
  auto inst = bw::vc_to_rdbp(k4(), 3);
  EXPECT_EQ(inst.pairs.size(), 6u);
  EXPECT_EQ(inst.candidates.size(), 4u);
  EXPECT_TRUE(bw::validate_planar(inst.graph).empty());
  EXPECT_LE(inst.graph.max_degree(), 4u);
  EXPECT_GE(inst.min_saving, inst.eps / 2);
  auto all = inst.graph.with_edges(inst.candidates);
  EXPECT_TRUE(bw::validate_planar(all).empty());
  EXPECT_LE(all.max_degree(), 5u);

  auto three = bw::rdbp_brute_force(inst);
  ASSERT_TRUE(three.has_value());
  EXPECT_EQ(three->size(), 3u);
  inst.budget = 2;
  EXPECT_FALSE(bw::rdbp_brute_force(inst).has_value());
  EXPECT_EQ(bw::rdbp_min_budget(inst), 3u);
}

TEST(Rdbp, ZeroAndFullBudget) {
  for (auto g : {k4(), prism()}) {
    auto inst = bw::vc_to_rdbp(g, 0);
    EXPECT_FALSE(bw::rdbp_brute_force(inst).has_value());
    inst.budget = inst.candidates.size();
    EXPECT_TRUE(bw::rdbp_brute_force(inst).has_value());
  }
}

TEST(Rdbp, ShortcutSubsetsAreExactlyCovers) {
  for (auto g : {k4(), prism()}) {
    auto inst = bw::vc_to_rdbp(g, 0);
    const std::size_t n = inst.candidates.size();
    ASSERT_EQ(n, g.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1) chosen.push_back(v);
      }
      EXPECT_EQ(bw::shortcuts_accept(inst, chosen), is_cover(g, chosen)) << mask;
      std::vector<std::pair<std::size_t, std::size_t>> extra;
      for (std::size_t v : chosen) extra.push_back(inst.candidates[v]);
      auto augmented = inst.graph.with_edges(extra);
      EXPECT_TRUE(bw::validate_planar(augmented).empty());
      EXPECT_LE(augmented.max_degree(), 5u);
    }
  }
}

TEST(Rdbp, MinBudgetEqualsVertexCover) {
  for (auto g : {k4(), prism()}) {
    auto inst = bw::vc_to_rdbp(g, 0);
    EXPECT_EQ(bw::rdbp_min_budget(inst), oracle::min_vertex_cover(g));
  }
  EXPECT_EQ(oracle::min_vertex_cover(k4()), 3u);
}
