#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cpl/algebra/serialize.hpp"
#include "cpl/cli/presets.hpp"

namespace cpl::cli {

struct CriterionOutcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  /// Filter keys, e.g. "entropy", "reduction".
  std::vector<std::string> tags;
  double budget_seconds = 1;
  /// Reported without affecting the verdict.
  bool blocking = true;
  /// Fails for a documented mathematical reason; see README.
  bool known_unattainable = false;
  std::function<CriterionOutcome()> run;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool within_budget = false;
  bool blocking = true;
  bool known_unattainable = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool ok() const { return passed && within_budget; }
  /// "PASS", "FAIL", "FAIL (unattainable)" or "FAIL (non-blocking)".
  std::string status() const;
};

const std::vector<Criterion>& acceptance_criteria();

/// Criteria whose name or tags contain `filter` (all when empty), run on up to
/// `jobs` threads; results are in id order.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "", std::size_t jobs = 1);

struct SuiteSummary {
  std::vector<CriterionResult> criteria;
  std::vector<PresetCheck> presets;

  /// Failures other than non-blocking or documented-unattainable criteria.
  std::size_t blocking_failures() const;
  Json to_json() const;
};

/// Preset integrity checks on `extra` fixtures plus, unless a filter is given,
/// every embedded preset; then the filtered acceptance battery.
SuiteSummary verify_suite(const std::string& filter, std::size_t jobs, const std::vector<Preset>& extra = {});

}  // namespace cpl::cli
