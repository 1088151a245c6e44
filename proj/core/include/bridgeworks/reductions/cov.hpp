#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bridgeworks/graph.hpp"
#include "bridgeworks/optimal_bridge.hpp"
#include "bridgeworks/reductions/sat.hpp"

namespace bridgeworks {

/// Entries in {0, 1, 2}.
using TernaryVector = std::vector<std::uint8_t>;

bool is_binary(const TernaryVector& v);

/// Complementary-vectors instance. When built from a formula, masks_a[i] is
/// the partial assignment of partition->first that produced a[i].
struct CovInstance {
  std::size_t dimension = 0;
  std::vector<TernaryVector> a;
  std::vector<TernaryVector> b;
  std::optional<VariablePartition> partition;
  std::vector<std::uint64_t> masks_a;
  std::vector<std::uint64_t> masks_b;

  /// Throws InputError on a bad entry or a dimension mismatch.
  void validate() const;
};

/// Entry i is 0 for exactly one true literal among the part's variables,
/// 1 for none, 2 for two or more.
CovInstance sat_to_cov(const OneInThreeSat& phi, bool force = false);

/// First (i, j) with a[i], b[j] binary and b[j] the complement of a[i].
std::optional<std::pair<std::size_t, std::size_t>> cov_brute_force(const CovInstance& inst);

struct OneBridgeReductionParams {
  std::size_t m = 0;
  Rational c;   // 1 + 1/3 + ... + (1/3)^(m-1)
  Rational c1;  // 0
  Rational c2;  // c + 2
};

OneBridgeReductionParams reduction_params(std::size_t m);

/// Length of segment i (1-based) for entry `digit`: (1/3)^(i-1), 0 or 4.
Rational segment_length_for(std::uint8_t digit, std::size_t i);

/// Sum of the segment lengths of the path built for v.
Rational path_depth(const TernaryVector& v);

struct OneBridgeReduction {
  WeightedTree t1;
  WeightedTree t2;
  OneBridgeReductionParams params;
  /// Last vertex of the path built for a[i] (resp. b[j]).
  std::vector<std::size_t> endpoints_a;
  std::vector<std::size_t> endpoints_b;
};

/// Builds the two trees. Each has an anchor joined to a root by an edge of
/// length 1, and one path per vector hanging from the root. Binary vectors
/// put their endpoint on x = 0 at height C - depth (T1) or depth (T2); every
/// other vertex sits off the axis, on the positive side in T1 and the
/// negative side in T2, so two vertices coincide only at endpoints of
/// paths whose depths sum to C. Edge lengths are explicit weights.
OneBridgeReduction cov_to_one_bridge(const CovInstance& inst);

struct OneBridgeIffReport {
  bool satisfiable = false;
  bool cov = false;
  bool bridge = false;
  std::optional<Assignment> assignment;
  std::optional<std::pair<std::size_t, std::size_t>> cov_pair;
  std::optional<DecisionWitness> bridge_witness;

  bool agree() const { return satisfiable == cov && cov == bridge; }
};

/// Runs the three exhaustive deciders on phi and its two reductions.
OneBridgeIffReport verify_one_bridge_iff(const OneInThreeSat& phi);

/// Number of i in [0, m - 1) with (1/3)^i <= sum_{j=i+1}^{m-1} (1/3)^j.
std::size_t power_tail_violations(std::size_t m);

}  // namespace bridgeworks
