#include "bridgeworks/reductions/sat.hpp"

#include <cstdlib>
#include <string>

#include "bridgeworks/error.hpp"

namespace bridgeworks {

void OneInThreeSat::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (int lit : clauses[i]) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables) {
        throw InputError("clause " + std::to_string(i + 1) + ": literal " + std::to_string(lit) +
                         " out of range");
      }
    }
  }
}

std::size_t true_literals(const std::array<int, 3>& clause, const Assignment& assignment) {
  std::size_t count = 0;
  for (int lit : clause) {
    bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
    if (value == (lit > 0)) ++count;
  }
  return count;
}

std::optional<Assignment> one_in_three_sat_brute_force(const OneInThreeSat& phi) {
  phi.validate();
  if (phi.variables > 24) throw InputError("exhaustive search limited to 24 variables");
  Assignment assignment(phi.variables);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.variables); ++mask) {
    for (std::size_t v = 0; v < phi.variables; ++v) assignment[v] = (mask >> v) & 1;
    bool ok = true;
    for (const auto& clause : phi.clauses) {
      if (true_literals(clause, assignment) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return assignment;
  }
  return std::nullopt;
}

VariablePartition partition_variables(const OneInThreeSat& phi) {
  VariablePartition part;
  part.padded = phi.variables % 2 == 1;
  part.variables = phi.variables + (part.padded ? 1 : 0);
  for (std::size_t v = 1; v <= part.variables; ++v) {
    (v <= part.variables / 2 ? part.first : part.second).push_back(v);
  }
  return part;
}

std::size_t partial_true_literals(const std::array<int, 3>& clause,
                                  const std::vector<std::size_t>& part, std::uint64_t mask) {
  std::size_t count = 0;
  for (int lit : clause) {
    const std::size_t var = static_cast<std::size_t>(std::abs(lit));
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (part[k] != var) continue;
      bool value = (mask >> k) & 1;
      if (value == (lit > 0)) ++count;
    }
  }
  return count;
}

void check_blowup(std::size_t variables, bool force) {
  if (variables > 24 && !force) {
    throw InputError("more than 24 variables; pass --force to build the instance anyway");
  }
  if (variables > 62) throw InputError("more than 62 variables cannot be enumerated");
}

}  // namespace bridgeworks
