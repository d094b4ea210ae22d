#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "univalence/error.hpp"
#include "univalence/sampling.hpp"

namespace univalence::cli {

enum class Command { check, sweep, chain, oracle, catalog };

std::string_view to_string(Command c);

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitError = 3;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  Command command = Command::check;
  std::string f = "identity";
  std::string g = "identity";
  std::string h = "hconst";
  cplx alpha{0.5, 0.0};
  std::string criterion = "theorem1";
  bool squared_variant = true;
  SamplingPlan plan;
  double tol = 1e-9;

  // sweep
  std::vector<cplx> alphas;
  bool both_variants = false;

  // chain
  std::vector<double> t_samples{0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
  std::vector<double> z_radii{0.5, 0.9, 1.0};
  std::size_t z_angles = 64;

  // oracle
  std::optional<double> collision_tolerance;
  std::optional<double> separation_floor;

  // Execution and output routing; not part of the recorded config.
  std::optional<std::string> json_path;
  std::optional<std::string> grid_csv_path;
  std::size_t workers = 1;
};

/// Canonicalizes function specs and applies criterion recording rules.
/// Throws univalence::Error on invalid specs.
RunConfig resolve(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);

/// Accepts either a config block or a whole report containing one.
RunConfig config_from_json(const nlohmann::json& j);

struct RunResult {
  int exit_code = kExitError;
  nlohmann::json report;
};

/// Runs the command and builds its report; writes the grid CSV when
/// requested. Throws univalence::Error on evaluation failures.
RunResult execute(const RunConfig& config);

/// Parses argv into a config. Returns nullopt after printing help.
/// Throws univalence::Error(UsageError) on malformed flags.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Full front end: parse, execute, write the report (to --json or `out`),
/// map errors to exit status 3 with a diagnostic on `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace univalence::cli
