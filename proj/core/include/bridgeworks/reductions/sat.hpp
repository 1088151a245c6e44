#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace bridgeworks {

/// One-in-three SAT: every clause needs exactly one true literal.
/// Literals are signed 1-based variable indices.
struct OneInThreeSat {
  std::size_t variables = 0;
  std::vector<std::array<int, 3>> clauses;

  /// Throws InputError on a zero literal or an index above `variables`.
  void validate() const;
};

/// Truth value of variable v is assignment[v - 1].
using Assignment = std::vector<bool>;

/// Number of true literal occurrences in `clause`.
std::size_t true_literals(const std::array<int, 3>& clause, const Assignment& assignment);

/// First satisfying assignment in binary counting order (variable 1 is the
/// lowest bit). Refuses more than 24 variables.
std::optional<Assignment> one_in_three_sat_brute_force(const OneInThreeSat& phi);

/// Split of the variables into a first and a second half by index. An odd
/// count is padded with one unused variable.
struct VariablePartition {
  std::size_t variables = 0;  // after padding
  bool padded = false;
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

VariablePartition partition_variables(const OneInThreeSat& phi);

/// Number of true literals in `clause` contributed by the variables of
/// `part`, assigned by the bits of `mask` (bit k drives part[k]).
std::size_t partial_true_literals(const std::array<int, 3>& clause,
                                  const std::vector<std::size_t>& part, std::uint64_t mask);

/// Shared size check for the 2^(n/2) generators.
void check_blowup(std::size_t variables, bool force);

}  // namespace bridgeworks
