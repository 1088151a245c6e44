#include "bridgeworks/reductions/ksum.hpp"

#include <unordered_map>

namespace bridgeworks {

BigInt repunit(std::size_t digits) {
  BigInt r = 0;
  for (std::size_t i = 0; i < digits; ++i) r = r * 10 + 1;
  return r;
}

BigInt from_digits(std::span<const int> digits) {
  BigInt r = 0;
  for (int d : digits) r = r * 10 + d;
  return r;
}

std::vector<int> to_digits(const BigInt& value, std::size_t width) {
  if (value < 0) throw InputError("to_digits needs a non-negative value");
  std::string text = value.get_str();
  std::vector<int> out;
  if (text.size() < width) out.assign(width - text.size(), 0);
  for (char ch : text) out.push_back(ch - '0');
  return out;
}

namespace {

int threesum_digit(std::size_t true_count) {
  return true_count >= 2 ? 2 : static_cast<int>(true_count);
}

// One integer per partial assignment of `part`: clause digits, then tags.
std::vector<BigInt> encode_part(const OneInThreeSat& phi, const std::vector<std::size_t>& part,
                                std::size_t tag_count, std::size_t tag) {
  std::vector<BigInt> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << part.size()); ++mask) {
    std::vector<int> digits;
    for (const auto& clause : phi.clauses) {
      digits.push_back(threesum_digit(partial_true_literals(clause, part, mask)));
    }
    for (std::size_t t = 0; t < tag_count; ++t) digits.push_back(t == tag ? 1 : 0);
    out.push_back(from_digits(digits));
  }
  return out;
}

}  // namespace

ThreeSumInstance sat_to_threesum(const OneInThreeSat& phi, bool force) {
  phi.validate();
  check_blowup(phi.variables, force);
  ThreeSumInstance inst;
  inst.partition = partition_variables(phi);
  inst.digits = phi.clauses.size() + 2;
  std::vector<BigInt> a = encode_part(phi, inst.partition->first, 2, 0);
  std::vector<BigInt> b = encode_part(phi, inst.partition->second, 2, 1);
  inst.a_count = a.size();
  inst.b_count = b.size();
  inst.values = std::move(a);
  inst.values.insert(inst.values.end(), b.begin(), b.end());
  inst.values.push_back(-repunit(inst.digits));
  return inst;
}

std::optional<std::array<std::size_t, 3>> threesum_brute_force(std::span<const BigInt> values) {
  // Positions of each value, ascending, for the hash-assisted third lookup.
  std::unordered_map<std::string, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < values.size(); ++i) where[values[i].get_str()].push_back(i);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      BigInt need = -(values[i] + values[j]);
      auto it = where.find(need.get_str());
      if (it == where.end()) continue;
      for (std::size_t k : it->second) {
        if (k > j) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

KSumInstance sat_to_ksum(const OneInThreeSat& phi, std::size_t k, bool force) {
  phi.validate();
  if (k < 3 || k > 6) throw InputError("k must be between 3 and 6");
  check_blowup(phi.variables, force);
  KSumInstance inst;
  inst.k = k;
  inst.digits = phi.clauses.size() + k - 1;
  const std::size_t groups = k - 1;
  const std::size_t size = (phi.variables + groups - 1) / groups;
  for (std::size_t g = 0; g < groups; ++g) {
    std::vector<std::size_t> vars;
    for (std::size_t v = g * size + 1; v <= std::min(phi.variables, (g + 1) * size); ++v) {
      vars.push_back(v);
    }
    inst.parts.push_back(encode_part(phi, vars, groups, g));
    inst.groups.push_back(std::move(vars));
  }
  inst.target = -repunit(inst.digits);
  return inst;
}

std::optional<std::vector<std::size_t>> ksum_brute_force(const KSumInstance& inst) {
  double combos = 1;
  for (const auto& part : inst.parts) combos *= static_cast<double>(part.size());
  if (combos > 1e7) throw InputError("k-sum brute force limited to 10^7 combinations");
  for (const auto& part : inst.parts) {
    if (part.empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(inst.parts.size(), 0);
  while (true) {
    BigInt sum = inst.target;
    for (std::size_t g = 0; g < pick.size(); ++g) sum += inst.parts[g][pick[g]];
    if (sum == 0) return pick;
    std::size_t g = pick.size();
    while (g > 0) {
      --g;
      if (++pick[g] < inst.parts[g].size()) break;
      pick[g] = 0;
      if (g == 0) return std::nullopt;
    }
  }
}

}  // namespace bridgeworks
