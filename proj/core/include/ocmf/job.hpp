#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ocmf {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Command { Charpoly, Slopes, Eigen, Clay, Compare, Stabilize };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

struct JobConfig {
  Command command = Command::Slopes;
  int p = 11;
  int weight = 0;
  int dim = 6;
  int precision = 13;
  /// nullopt means "auto".
  std::optional<int> qprec;
  int iterations = 9;
  /// Eigen start: the index +1 vector unless a seed is given.
  std::optional<std::uint64_t> seed;
  /// Clay entries evaluated; 0 selects two periods.
  int count = 0;
  /// Clay comparison window; 0 selects the largest usable.
  int window = 0;
  /// Stabilization dimensions; empty selects {dim, dim + 2}.
  std::vector<int> dims;
  std::optional<std::string> json_path;
  std::optional<std::string> cache_dir;
};

/// Config-level checks; returns an error message or nullopt.
std::optional<std::string> validate(const JobConfig& config);

struct JobOutcome {
  /// 0 success, 1 module error, 2 config error.
  int exit_code = 0;
  nlohmann::json report;
  std::string text;
  /// Non-fatal diagnostics (cache warnings).
  std::vector<std::string> warnings;
};

/// Runs the command. The report carries params, versions, a timestamp and
/// the command's results; every ring element, valuation and slope is a
/// string. Errors are reported as {"error": {"kind", "message"}}.
JobOutcome run(const JobConfig& config);

/// The report without its timestamp, for determinism checks.
nlohmann::json strip_timestamp(nlohmann::json report);

}  // namespace ocmf
