#include "report.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace bwcli {

namespace bw = bridgeworks;

RunReport::RunReport(std::string subcommand, std::vector<std::string> command)
    : subcommand_(std::move(subcommand)), command_(std::move(command)) {}

void RunReport::add_input(const std::string& name, const bw::EmbeddedGraph& g) {
  inputs_.push_back({{"name", name},
                     {"kind", "graph"},
                     {"vertices", g.size()},
                     {"edges", g.edges().size()},
                     {"digest", digest(bw::serialize_graph(g))}});
}

void RunReport::add_input(const std::string& name, const bw::OneInThreeSat& phi) {
  inputs_.push_back({{"name", name},
                     {"kind", "sat"},
                     {"variables", phi.variables},
                     {"clauses", phi.clauses.size()},
                     {"digest", digest(bw::serialize_sat(phi))}});
}

json RunReport::to_json() const {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  json out{{"subcommand", subcommand_},
           {"command", command_},
           {"inputs", inputs_},
           {"solution", solution_},
           {"duration_ms", ms}};
  out["seed"] = seed_ ? json(*seed_) : json(nullptr);
  out["backend"] = backend_ ? json(std::string(bw::to_string(*backend_))) : json(nullptr);
  return out;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::optional<bw::Backend> requested_backend() {
  const char* env = std::getenv("BRIDGEWORKS_BACKEND");
  if (env == nullptr || *env == '\0') return std::nullopt;
  auto b = bw::parse_backend(env);
  if (!b) throw bw::InputError(std::string("BRIDGEWORKS_BACKEND must be rational or double, got '") + env + "'");
  return b;
}

bool exact_instance(std::span<const bw::WeightedTree> trees) {
  for (const auto& t : trees) {
    if (!t.all_lengths_exact()) return false;
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      for (const bw::Point& p : trees[i].points()) {
        for (const bw::Point& q : trees[j].points()) {
          if (!bw::euclidean_distance(p, q).is_exact()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bw::Backend choose_backend(std::span<const bw::WeightedTree> trees) {
  auto forced = requested_backend();
  if (forced == bw::Backend::kDouble) return *forced;
  const bool exact = exact_instance(trees);
  if (forced == bw::Backend::kRational && !exact) {
    throw bw::InputError("rational backend requested, but the input has irrational distances");
  }
  return exact ? bw::Backend::kRational : bw::Backend::kDouble;
}

bw::Backend choose_backend_exact() { return requested_backend().value_or(bw::Backend::kRational); }

}  // namespace bwcli
