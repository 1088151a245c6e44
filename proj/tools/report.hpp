#pragma once

#include <json.hpp>

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridgeworks/bridgeworks.hpp"

namespace bwcli {

using nlohmann::json;

/// Exit codes: solved / decision true, decision false / no witness, bad input.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kInputError = 2;

/// Machine-readable result of one command. Everything except duration_ms is
/// a function of the command line and the input files.
class RunReport {
 public:
  RunReport(std::string subcommand, std::vector<std::string> command);

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_backend(bridgeworks::Backend backend) { backend_ = backend; }
  void add_input(const std::string& name, const bridgeworks::EmbeddedGraph& g);
  void add_input(const std::string& name, const bridgeworks::OneInThreeSat& phi);
  json& solution() { return solution_; }

  json to_json() const;

 private:
  std::string subcommand_;
  std::vector<std::string> command_;
  std::optional<std::uint64_t> seed_;
  std::optional<bridgeworks::Backend> backend_;
  json inputs_ = json::array();
  json solution_ = json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// FNV-1a over the text, as 16 hex digits.
std::string digest(std::string_view text);

/// BRIDGEWORKS_BACKEND if set, else rational when every tree edge and every
/// distance between vertices of different trees is rational. Forcing the
/// rational backend on other input throws InputError.
bridgeworks::Backend choose_backend(std::span<const bridgeworks::WeightedTree> trees);

/// Same rule for a value that is rational by construction.
bridgeworks::Backend choose_backend_exact();

template <class T>
json number(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v;
  } else {
    return bridgeworks::format_rational(v);
  }
}

}  // namespace bwcli
