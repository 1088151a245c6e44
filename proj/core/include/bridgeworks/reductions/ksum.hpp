#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bridgeworks/numeric.hpp"
#include "bridgeworks/reductions/sat.hpp"

namespace bridgeworks {

/// The integer written as `digits` ones.
BigInt repunit(std::size_t digits);

/// Decimal value of a digit list, most significant first. Digits may exceed
/// 9; carries are resolved by the addition.
BigInt from_digits(std::span<const int> digits);

/// Decimal digits of a non-negative value, most significant first, left
/// padded with zeros to `width`.
std::vector<int> to_digits(const BigInt& value, std::size_t width);

struct ThreeSumInstance {
  /// A-integers, then B-integers, then -repunit(digits).
  std::vector<BigInt> values;
  std::size_t a_count = 0;
  std::size_t b_count = 0;
  std::size_t digits = 0;  // m + 2
  std::optional<VariablePartition> partition;
};

/// Clause digit i is 0 for no true literal, 1 for exactly one, 2 for more;
/// the two trailing digits tag the half (10 for A, 01 for B).
ThreeSumInstance sat_to_threesum(const OneInThreeSat& phi, bool force = false);

/// First i < j < k (lexicographically) with values[i] + values[j] + values[k] == 0.
std::optional<std::array<std::size_t, 3>> threesum_brute_force(std::span<const BigInt> values);

struct KSumInstance {
  std::size_t k = 3;
  std::size_t digits = 0;  // m + k - 1
  /// Variables of each of the k - 1 groups.
  std::vector<std::vector<std::size_t>> groups;
  /// Integers built from each group's partial assignments.
  std::vector<std::vector<BigInt>> parts;
  BigInt target;  // -repunit(digits)
};

/// k - 1 groups of at most ceil(n / (k - 1)) consecutive variables; group g
/// carries a one in tag digit m + 1 + g. Requires 3 <= k <= 6.
KSumInstance sat_to_ksum(const OneInThreeSat& phi, std::size_t k, bool force = false);

/// First choice of one index per part (lexicographic) whose values sum with
/// the target to zero. Refuses more than 10^7 combinations.
std::optional<std::vector<std::size_t>> ksum_brute_force(const KSumInstance& inst);

}  // namespace bridgeworks
