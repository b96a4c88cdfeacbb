#include "cutplan/cli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "cutplan/error.hpp"
#include "cutplan/oracle.hpp"

namespace cutplan::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string set_label(const ComponentSet& set, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ", ";
    out += names[set[k]];
  }
  return out + "}";
}

ojson labels(const ComponentSet& set, const std::vector<std::string>& names) {
  auto out = ojson::array();
  for (auto j : set) out.push_back(names[j]);
  return out;
}

ojson exact(const Rational& value) {
  return ojson{{"exact", to_fraction_string(value)},
               {"decimal", round_to_12_digits(to_double(value))}};
}

std::string short_fraction(const Rational& value) {
  return is_integer(value) ? boost::multiprecision::numerator(value).str()
                           : to_fraction_string(value);
}

std::string decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

ojson plan_json(const IntegerPlan& plan, const BoundResult& bound,
                const std::vector<std::string>& names) {
  ojson tests = ojson::object();
  for (std::size_t j = 0; j < names.size(); ++j) tests[names[j]] = plan.tests[j];
  return ojson{{"n_requested", plan.n_requested},
               {"n_minus", plan.n_minus},
               {"n_plus", plan.n_plus},
               {"remainder", plan.remainder},
               {"remainder_distributed", plan.remainder_distributed},
               {"tests", std::move(tests)},
               {"n_min", plan.n_min},
               {"q_upper", round_to_12_digits(bound.q_upper)}};
}

void render_plan(std::ostringstream& out, const char* title, const IntegerPlan& plan,
                 const BoundResult& bound, const std::vector<std::string>& names) {
  out << "\n" << title << " (N = " << plan.n_requested << ", alpha = "
      << decimal(bound.alpha) << ")\n";
  out << "  N- " << plan.n_minus << "   N+ " << plan.n_plus << "   remainder "
      << plan.remainder
      << (plan.remainder == 0           ? ""
          : plan.remainder_distributed ? " (distributed round-robin)"
                                       : " (unallocated)")
      << "\n";
  for (std::size_t j = 0; j < names.size(); ++j) {
    out << "  " << std::left << std::setw(12) << names[j] << plan.tests[j] << "\n";
  }
  out << "  N_min    " << plan.n_min << "\n";
  out << "  q_upper  " << decimal(bound.q_upper) << "\n";
}

AuditReport run_audit(const PlanReport& report) {
  AuditReport audit;
  const auto& cutsets = report.cutsets;
  const auto& fp = report.fractions;

  const std::size_t constraints = cutsets.cutset_count() + cutsets.component_count();
  if (constraints <= oracle::kMaxVertexConstraints) {
    const auto vertices = oracle::enumerate_lp_vertices(fraction_lp(cutsets));
    audit.vertex_checked = true;
    audit.vertex_objective = vertices.objective;
    if (vertices.status != LpStatus::kOptimal ||
        vertices.objective * fp.cutset_fraction != 1) {
      throw InternalInvariantViolation(
          "audit: vertex enumeration optimum " + to_fraction_string(vertices.objective) +
          " disagrees with 1/g = " + to_fraction_string(1 / fp.cutset_fraction));
    }
  } else {
    audit.skipped.push_back("vertex enumeration: s + m = " + std::to_string(constraints) +
                            " exceeds " + std::to_string(oracle::kMaxVertexConstraints));
  }

  if (!report.plan) {
    audit.skipped.push_back("integer plan search: no test budget given");
    return audit;
  }
  const TestCount n_minus = report.plan->n_minus;
  const auto space = oracle::allocation_count(cutsets.component_count(), n_minus);
  if (space > oracle::kDefaultAllocationCap) {
    audit.skipped.push_back("integer plan search: " + std::to_string(space) +
                            " allocations of N- exceed the cap");
    return audit;
  }
  const auto best = oracle::brute_force_plan(cutsets, n_minus);
  audit.plan_checked = true;
  audit.oracle_n_min = best.best_n_min;
  if (Rational(best.best_n_min) != fp.cutset_fraction * n_minus) {
    throw InternalInvariantViolation(
        "audit: exhaustive search reaches N_min = " + std::to_string(best.best_n_min) +
        " at N- = " + std::to_string(n_minus) + ", LP plan predicts " +
        to_fraction_string(fp.cutset_fraction * n_minus));
  }
  return audit;
}

}  // namespace

double round_to_12_digits(double value) {
  return std::strtod(decimal(value).c_str(), nullptr);
}

PipelineResult run_pipeline(const SystemStructure& structure,
                            const std::optional<std::string>& name,
                            const PlanOptions& options, const PlanCache* cache) {
  // Reject a bad alpha before any solving happens.
  confidence_bound(1, options.alpha);

  PipelineResult result{.report = PlanReport{.cutsets = minimal_cutsets(structure)}};
  PlanReport& report = result.report;
  const auto& cutsets = report.cutsets;
  report.structure_hash = structure_hash(cutsets);
  report.name = name;
  report.components = structure.component_names();
  report.alpha = options.alpha;
  report.tests = options.tests;

  const auto pathsets = minimal_pathsets(cutsets);
  report.pathset_count = pathsets.size();
  for (const auto& p : pathsets) {
    if (report.shortest_pathset.empty() || p.size() < report.shortest_pathset.size()) {
      report.shortest_pathset = p;
    }
  }

  std::optional<FractionPlan> cached;
  if (cache) cached = cache->lookup(cutsets, result.notes);
  if (cached) {
    result.cache = CacheOutcome::kHit;
    if (options.verify_cache && optimize_fractions(cutsets) != *cached) {
      throw InternalInvariantViolation("cache entry " + cache->entry_path(cutsets).string() +
                                       " differs from a fresh solve");
    }
    report.fractions = std::move(*cached);
  } else {
    report.fractions = optimize_fractions(cutsets);
    if (cache) {
      result.cache = result.notes.empty() ? CacheOutcome::kMiss : CacheOutcome::kRefreshed;
      try {
        cache->store(cutsets, report.fractions);
      } catch (const std::exception& e) {
        result.notes.push_back(std::string("could not write cache entry: ") + e.what());
      }
    }
  }

  if (options.tests) {
    report.plan = integer_plan(report.fractions, cutsets, *options.tests,
                               options.distribute_remainder);
    report.bound = confidence_bound(report.plan->n_min, options.alpha);
    if (options.plus) {
      report.plus_plan = integer_plan(report.fractions, cutsets, report.plan->n_plus);
      report.plus_bound = confidence_bound(report.plus_plan->n_min, options.alpha);
    }
  }
  report.path_strategy =
      shortest_path_check(report.fractions, cutsets, options.tests.value_or(0));

  for (auto j : cutsets.irrelevant_components()) {
    report.warnings.push_back("component " + report.components[j] +
                              " belongs to no minimal cutset and receives no tests");
  }
  if (report.fractions.alternative_optima) {
    report.warnings.push_back(
        "the LP optimum may not be unique; other optimal fractions could give a "
        "different N0");
  }

  if (options.audit) report.audit = run_audit(report);
  return result;
}

nlohmann::ordered_json to_json(const PlanReport& report) {
  const auto& names = report.components;
  ojson out;
  out["report_version"] = kReportVersion;

  ojson input;
  input["structure_hash"] = report.structure_hash;
  if (report.name) input["name"] = *report.name;
  input["components"] = names;
  input["alpha"] = report.alpha;
  input["tests"] = report.tests ? ojson(*report.tests) : ojson(nullptr);
  out["input"] = std::move(input);

  auto cutsets = ojson::array();
  for (const auto& row : report.cutsets.rows()) cutsets.push_back(labels(row, names));
  out["minimal_cutsets"] = std::move(cutsets);
  out["pathsets"] = {{"count", report.pathset_count},
                     {"shortest_length", report.path_strategy.shortest_path},
                     {"shortest_example", labels(report.shortest_pathset, names)}};

  ojson fractions = ojson::object();
  for (std::size_t j = 0; j < names.size(); ++j) {
    fractions[names[j]] = exact(report.fractions.fractions[j]);
  }
  out["fractions"] = {{"components", std::move(fractions)},
                      {"cutset_fraction", exact(report.fractions.cutset_fraction)},
                      {"n_zero", report.fractions.n_zero.str()}};

  out["plan"] = report.plan ? plan_json(*report.plan, *report.bound, names) : ojson(nullptr);
  if (report.plus_plan) out["plus_plan"] = plan_json(*report.plus_plan, *report.plus_bound, names);

  const auto& path = report.path_strategy;
  out["path_strategy"] = {{"shortest_path_length", path.shortest_path},
                          {"path_fraction", exact(path.path_fraction)},
                          {"gap", exact(path.gap)},
                          {"n_min", report.tests ? ojson(path.path_strategy_n_min) : ojson(nullptr)}};

  if (report.audit) {
    const auto& audit = *report.audit;
    ojson a;
    a["vertex_enumeration"] =
        audit.vertex_checked ? ojson(to_fraction_string(audit.vertex_objective)) : ojson(nullptr);
    a["exhaustive_n_min"] = audit.plan_checked ? ojson(audit.oracle_n_min) : ojson(nullptr);
    a["skipped"] = audit.skipped;
    out["audit"] = std::move(a);
  }
  out["warnings"] = report.warnings;
  return out;
}

std::string render_text(const PlanReport& report) {
  const auto& names = report.components;
  std::ostringstream out;
  if (report.name) out << "structure   " << *report.name << "\n";
  out << "hash        " << report.structure_hash << "\n";
  out << "components  " << names.size() << "\n";

  out << "\nminimal cutsets (" << report.cutsets.cutset_count() << ")\n";
  for (const auto& row : report.cutsets.rows()) out << "  " << set_label(row, names) << "\n";
  out << "minimal pathsets: " << report.pathset_count
      << ", shortest P = " << report.path_strategy.shortest_path << ", e.g. "
      << set_label(report.shortest_pathset, names) << "\n";

  out << "\noptimal fractions\n";
  for (std::size_t j = 0; j < names.size(); ++j) {
    const auto& f = report.fractions.fractions[j];
    out << "  " << std::left << std::setw(12) << names[j] << std::setw(12)
        << short_fraction(f) << to_decimal_string(f) << "\n";
  }
  out << "  " << std::setw(12) << "g" << std::setw(12)
      << short_fraction(report.fractions.cutset_fraction)
      << to_decimal_string(report.fractions.cutset_fraction) << "\n";
  out << "  " << std::setw(12) << "N0" << report.fractions.n_zero.str() << "\n";

  if (report.plan) render_plan(out, "integer plan", *report.plan, *report.bound, names);
  if (report.plus_plan) render_plan(out, "N+ plan", *report.plus_plan, *report.plus_bound, names);

  const auto& path = report.path_strategy;
  out << "\nsingle shortest path strategy\n";
  out << "  P = " << path.shortest_path << ", 1/P = " << short_fraction(path.path_fraction)
      << ", g - 1/P = " << short_fraction(path.gap) << "\n";
  if (report.plan) {
    out << "  floor(N/P) = " << path.path_strategy_n_min << " vs optimal N_min = "
        << report.plan->n_min << "\n";
  }

  if (report.audit) {
    const auto& audit = *report.audit;
    out << "\naudit\n";
    if (audit.vertex_checked) {
      out << "  vertex enumeration H = " << short_fraction(audit.vertex_objective)
          << " (agrees)\n";
    }
    if (audit.plan_checked) {
      out << "  exhaustive N_min at N- = " << audit.oracle_n_min << " (agrees)\n";
    }
    for (const auto& s : audit.skipped) out << "  skipped " << s << "\n";
  }
  if (!report.warnings.empty()) {
    out << "\nwarnings\n";
    for (const auto& w : report.warnings) out << "  " << w << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const EvaluationReport& report) {
  const auto& names = report.components;
  ojson tests = ojson::object();
  for (std::size_t j = 0; j < names.size(); ++j) tests[names[j]] = report.tests[j];
  return ojson{{"report_version", kReportVersion},
               {"structure_hash", structure_hash(report.cutsets)},
               {"tests", std::move(tests)},
               {"total", report.evaluation.total},
               {"n_min", report.evaluation.n_min},
               {"alpha", report.evaluation.bound.alpha},
               {"q_upper", round_to_12_digits(report.evaluation.bound.q_upper)}};
}

std::string render_text(const EvaluationReport& report) {
  std::ostringstream out;
  out << "plan evaluation (alpha = " << decimal(report.evaluation.bound.alpha) << ")\n";
  for (std::size_t j = 0; j < report.components.size(); ++j) {
    out << "  " << std::left << std::setw(12) << report.components[j] << report.tests[j]
        << "\n";
  }
  out << "  total    " << report.evaluation.total << "\n";
  out << "  N_min    " << report.evaluation.n_min << "\n";
  out << "  q_upper  " << decimal(report.evaluation.bound.q_upper) << "\n";
  return out.str();
}

}  // namespace cutplan::cli
