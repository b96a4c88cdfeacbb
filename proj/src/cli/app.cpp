#include "cutplan/cli/app.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "cutplan/cli/cache.hpp"
#include "cutplan/cli/document.hpp"
#include "cutplan/cli/report.hpp"
#include "cutplan/error.hpp"

namespace cutplan::cli {

namespace {

struct PlanArgs {
  std::string file;
  std::optional<TestCount> tests;
  double alpha = kDefaultAlpha;
  bool plus = false;
  bool distribute_remainder = false;
  bool audit = false;
  bool no_cache = false;
  bool verify_cache = false;
  std::optional<std::string> cache_dir;
  std::string format = "text";
};

struct EvaluateArgs {
  std::string file;
  std::vector<TestCount> plan;
  double alpha = kDefaultAlpha;
  std::string format = "text";
};

int exit_code_for(const Error& error) {
  if (error.name() == "BudgetTooSmall") return kExitBudgetError;
  if (error.name() == "InternalInvariantViolation") return kExitInternalError;
  return kExitInputError;
}

const char* cache_outcome_label(CacheOutcome outcome) {
  switch (outcome) {
    case CacheOutcome::kHit: return "hit";
    case CacheOutcome::kMiss: return "miss (stored)";
    case CacheOutcome::kRefreshed: return "refreshed";
    case CacheOutcome::kDisabled: return "disabled";
  }
  return "unknown";
}

int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
  const StructureDocument doc = read_document(args.file);
  const SystemStructure structure = doc.to_structure();

  PlanOptions options;
  options.tests = args.tests;
  options.alpha = args.alpha;
  options.plus = args.plus;
  options.distribute_remainder = args.distribute_remainder;
  options.audit = args.audit;
  options.verify_cache = args.verify_cache;

  std::optional<PlanCache> cache;
  if (!args.no_cache) cache.emplace(default_cache_directory(args.cache_dir));

  const PipelineResult result =
      run_pipeline(structure, doc.name, options, cache ? &*cache : nullptr);
  for (const auto& note : result.notes) err << "cutplan: warning: " << note << "\n";
  if (cache) {
    err << "cutplan: cache " << cache_outcome_label(result.cache) << " "
        << result.report.structure_hash << "\n";
  }

  if (args.format == "json") {
    out << to_json(result.report).dump(2) << "\n";
  } else {
    out << render_text(result.report);
  }
  return kExitSuccess;
}

int run_evaluate(const EvaluateArgs& args, std::ostream& out) {
  const StructureDocument doc = read_document(args.file);
  const SystemStructure structure = doc.to_structure();
  if (args.plan.size() != structure.component_count()) {
    throw ParseError("--plan lists " + std::to_string(args.plan.size()) +
                     " counts but the structure has " +
                     std::to_string(structure.component_count()) + " components");
  }
  EvaluationReport report{.components = structure.component_names(),
                          .cutsets = minimal_cutsets(structure),
                          .tests = args.plan};
  report.evaluation = evaluate_plan(report.cutsets, report.tests, args.alpha);
  if (args.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  return kExitSuccess;
}

void print_error(std::ostream& out, std::ostream& err, bool json, const std::string& name,
                 const std::string& message, int code) {
  err << "cutplan: error [" << name << "]: " << message << "\n";
  if (json) {
    nlohmann::ordered_json doc;
    doc["error"] = {{"name", name}, {"message", message}, {"exit_code", code}};
    out << doc.dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal component test plans for coherent systems"};
  app.name("cutplan");
  app.require_subcommand(1);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand(
      "plan", "Optimal fractions, integer plan and confidence bound for a structure");
  plan_cmd->add_option("file", plan.file, "Structure document (JSON)")->required();
  plan_cmd->add_option("--tests", plan.tests,
                       "Total test budget N; omit to report fractions only");
  plan_cmd->add_option("--alpha", plan.alpha, "1 - confidence level")
      ->capture_default_str();
  plan_cmd->add_flag("--plus", plan.plus, "Also emit the plan for N+ tests");
  plan_cmd->add_flag("--distribute-remainder", plan.distribute_remainder,
                     "Hand the N mod N0 leftover tests out round-robin");
  plan_cmd->add_flag("--audit", plan.audit,
                     "Cross-check against exhaustive oracles when small enough");
  plan_cmd->add_flag("--no-cache", plan.no_cache, "Always solve the LP");
  plan_cmd->add_flag("--verify-cache", plan.verify_cache,
                     "On a cache hit, re-solve and require identical fractions");
  plan_cmd->add_option("--cache-dir", plan.cache_dir,
                       "Plan cache directory (default $CUTPLAN_CACHE_DIR or ~/.cache/cutplan)");
  plan_cmd->add_option("--format", plan.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  EvaluateArgs evaluate;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "N_min and confidence bound of a given integer plan");
  evaluate_cmd->add_option("file", evaluate.file, "Structure document (JSON)")->required();
  evaluate_cmd->add_option("--plan", evaluate.plan, "Tests per component, in order")
      ->required()
      ->delimiter(',');
  evaluate_cmd->add_option("--alpha", evaluate.alpha, "1 - confidence level")
      ->capture_default_str();
  evaluate_cmd->add_option("--format", evaluate.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "cutplan: " << e.what() << "\n";
    return kExitInputError;
  }

  const bool json = (plan_cmd->parsed() && plan.format == "json") ||
                    (evaluate_cmd->parsed() && evaluate.format == "json");
  try {
    if (plan_cmd->parsed()) return run_plan(plan, out, err);
    return run_evaluate(evaluate, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    print_error(out, err, json, e.name(), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    print_error(out, err, json, "InternalError", e.what(), kExitInternalError);
    return kExitInternalError;
  }
}

}  // namespace cutplan::cli
