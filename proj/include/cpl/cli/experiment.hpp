#pragma once

#include <string>
#include <vector>

#include "cpl/cli/config.hpp"

namespace cpl::cli {

struct Artifact {
  std::string filename;
  std::string content;
};

struct ExperimentResult {
  /// Machine-readable summary, also written as report.json.
  Json report;
  /// Human-readable one-line result for the terminal.
  std::string headline;
  std::vector<Artifact> artifacts;
  /// False when the experiment ran but its check failed (exit code 1).
  bool verified = true;
};

/// Validates, runs and collects artifacts; nothing is written. Module errors
/// propagate as cpl::Error.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes each artifact under dir (created if missing). Errc::ConfigInvalid if
/// the directory cannot be used.
void write_artifacts(const ExperimentResult& r, const std::string& dir);

/// Runs independent experiments on up to `jobs` threads; results keep input
/// order and the first error (by index) is rethrown.
std::vector<ExperimentResult> run_experiments(const std::vector<ExperimentConfig>& cfgs, std::size_t jobs);

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfigInvalid = 2;
inline constexpr int kExitComputeError = 3;

}  // namespace cpl::cli
