#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cutplan/cli/cache.hpp"
#include "cutplan/planner.hpp"
#include "cutplan/structure.hpp"

namespace cutplan::cli {

inline constexpr int kReportVersion = 1;
inline constexpr double kDefaultAlpha = 0.05;

struct PlanOptions {
  std::optional<TestCount> tests;  // no integer plan when absent
  double alpha = kDefaultAlpha;
  bool plus = false;
  bool distribute_remainder = false;
  bool audit = false;
  bool verify_cache = false;
};

struct AuditReport {
  bool vertex_checked = false;
  Rational vertex_objective;  // H from vertex enumeration
  bool plan_checked = false;
  TestCount oracle_n_min = 0;  // exhaustive best at N-
  std::vector<std::string> skipped;
};

struct PlanReport {
  std::string structure_hash;
  std::optional<std::string> name;
  std::vector<std::string> components;
  double alpha = kDefaultAlpha;
  std::optional<TestCount> tests;

  CutsetMatrix cutsets;
  std::size_t pathset_count = 0;
  ComponentSet shortest_pathset;  // first in canonical order

  FractionPlan fractions;
  std::optional<IntegerPlan> plan;
  std::optional<BoundResult> bound;
  std::optional<IntegerPlan> plus_plan;
  std::optional<BoundResult> plus_bound;
  PathStrategyReport path_strategy;

  std::optional<AuditReport> audit;
  std::vector<std::string> warnings;
};

enum class CacheOutcome { kDisabled, kHit, kMiss, kRefreshed };

struct PipelineResult {
  PlanReport report;
  CacheOutcome cache = CacheOutcome::kDisabled;
  // Cache problems worth telling the user about but not part of the report.
  std::vector<std::string> notes;
};

/// minimal cutsets -> fractions (cache or solver) -> integer plan ->
/// bound -> path-strategy comparison, with the optional oracle audit.
///
/// Throws InvalidAlpha, BudgetTooSmall and InternalInvariantViolation
/// (failed audit, a cache entry that disagrees with a fresh solve under
/// verify_cache, or g < 1/P).
PipelineResult run_pipeline(const SystemStructure& structure,
                            const std::optional<std::string>& name,
                            const PlanOptions& options, const PlanCache* cache);

/// Stable key order; decimals carry 12 significant digits.
nlohmann::ordered_json to_json(const PlanReport& report);

std::string render_text(const PlanReport& report);

struct EvaluationReport {
  std::vector<std::string> components;
  CutsetMatrix cutsets;
  std::vector<TestCount> tests;
  PlanEvaluation evaluation;
};

nlohmann::ordered_json to_json(const EvaluationReport& report);
std::string render_text(const EvaluationReport& report);

/// Parses a double rendered to 12 significant digits back into a double.
double round_to_12_digits(double value);

}  // namespace cutplan::cli
