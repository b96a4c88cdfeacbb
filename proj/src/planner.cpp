#include "cutplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cutplan/error.hpp"

namespace cutplan {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

TestCount to_count(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<TestCount>::max()) {
    throw std::overflow_error("test count does not fit in 64 bits");
  }
  return value.convert_to<TestCount>();
}

Rational min_cutset_share(const CutsetMatrix& cutsets,
                          std::span<const Rational> fractions) {
  Rational best;
  bool first = true;
  for (const auto& row : cutsets.rows()) {
    Rational share;
    for (auto j : row) share += fractions[j];
    if (first || share < best) best = share;
    first = false;
  }
  return best;
}

}  // namespace

LpProblem fraction_lp(const CutsetMatrix& cutsets) {
  const std::size_t m = cutsets.component_count();
  const std::size_t s = cutsets.cutset_count();
  LpProblem lp;
  lp.cost.assign(m, Rational(1));
  lp.rhs.assign(s, Rational(1));
  lp.constraint_matrix.assign(s, std::vector<Rational>(m));
  for (std::size_t i = 0; i < s; ++i) {
    for (auto j : cutsets.rows()[i]) lp.constraint_matrix[i][j] = 1;
  }
  return lp;
}

FractionPlan optimize_fractions(const CutsetMatrix& cutsets) {
  const LpProblem lp = fraction_lp(cutsets);
  const LpSolution solution = solve_lp(lp);
  // h = (1,...,1) is feasible and the cost is nonnegative, so anything but
  // a strictly positive optimum means the solver is broken.
  if (solution.status != LpStatus::kOptimal) {
    throw InternalInvariantViolation(std::string("fraction LP reported ") +
                                     to_string(solution.status));
  }
  if (solution.objective <= 0) {
    throw InternalInvariantViolation("fraction LP optimum is not positive");
  }

  FractionPlan plan;
  plan.cutset_fraction = 1 / solution.objective;
  plan.fractions.reserve(solution.variables.size());
  for (const auto& h : solution.variables) {
    plan.fractions.push_back(h / solution.objective);
  }
  plan.n_zero = find_n_zero(plan.fractions);
  plan.alternative_optima = solution.zero_reduced_cost_nonbasic;

  if (!is_consistent(plan, cutsets)) {
    throw InternalInvariantViolation("recovered fraction plan is inconsistent");
  }
  return plan;
}

BigInt find_n_zero(std::span<const Rational> fractions) {
  BigInt result = 1;
  for (const auto& f : fractions) {
    result = boost::multiprecision::lcm(result, BigInt(denominator(f)));
  }
  return result;
}

TestCount cutset_n_min(const CutsetMatrix& cutsets,
                       std::span<const TestCount> tests) {
  if (tests.size() != cutsets.component_count()) {
    throw std::invalid_argument("plan length does not match component count");
  }
  TestCount best = std::numeric_limits<TestCount>::max();
  for (const auto& row : cutsets.rows()) {
    TestCount total = 0;
    for (auto j : row) total += tests[j];
    best = std::min(best, total);
  }
  return best;
}

IntegerPlan integer_plan(const FractionPlan& plan, const CutsetMatrix& cutsets,
                         TestCount n_requested, bool distribute_remainder) {
  if (plan.fractions.size() != cutsets.component_count()) {
    throw std::invalid_argument("fraction plan does not match cutset matrix");
  }
  if (BigInt(n_requested) < plan.n_zero) {
    throw BudgetTooSmall("budget of " + std::to_string(n_requested) +
                         " tests is below N0 = " + plan.n_zero.str() +
                         "; the smallest optimal plan uses N+ = " +
                         plan.n_zero.str() + " tests");
  }
  const TestCount n_zero = to_count(plan.n_zero);

  IntegerPlan out;
  out.n_requested = n_requested;
  out.remainder = n_requested % n_zero;
  out.n_minus = n_requested - out.remainder;
  out.n_plus = to_count(BigInt(out.n_minus) + plan.n_zero);
  out.tests.reserve(plan.fractions.size());
  for (const auto& f : plan.fractions) {
    const Rational scaled = f * out.n_minus;
    if (!is_integer(scaled)) {
      throw InternalInvariantViolation("f * N- is not integral");
    }
    out.tests.push_back(to_count(numerator(scaled)));
  }
  if (distribute_remainder) {
    for (TestCount k = 0; k < out.remainder; ++k) {
      ++out.tests[k % out.tests.size()];
    }
    out.remainder_distributed = out.remainder > 0;
  }
  out.n_min = cutset_n_min(cutsets, out.tests);
  return out;
}

BoundResult confidence_bound(TestCount n_min, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidAlpha("alpha must lie strictly between 0 and 1");
  }
  BoundResult out;
  out.alpha = alpha;
  out.n_min = n_min;
  out.q_upper = 1.0;
  if (n_min > 0) {
    out.q_upper = std::min(-std::log(alpha) / static_cast<double>(n_min), 1.0);
  }
  return out;
}

PathStrategyReport shortest_path_check(const FractionPlan& plan,
                                       const CutsetMatrix& cutsets,
                                       TestCount n_requested) {
  PathStrategyReport out;
  out.shortest_path = shortest_path_length(cutsets);
  out.cutset_fraction = plan.cutset_fraction;
  out.path_fraction = Rational(1, static_cast<long long>(out.shortest_path));
  out.gap = out.cutset_fraction - out.path_fraction;
  out.path_strategy_n_min = n_requested / out.shortest_path;
  if (out.gap < 0) {
    throw InternalInvariantViolation(
        "optimal cutset fraction " + to_fraction_string(out.cutset_fraction) +
        " is below 1/P = " + to_fraction_string(out.path_fraction));
  }
  return out;
}

bool is_consistent(const FractionPlan& plan, const CutsetMatrix& cutsets) {
  if (plan.fractions.size() != cutsets.component_count()) return false;
  Rational total;
  for (const auto& f : plan.fractions) {
    if (f < 0) return false;
    total += f;
  }
  if (total != 1) return false;
  if (min_cutset_share(cutsets, plan.fractions) != plan.cutset_fraction) {
    return false;
  }
  return plan.n_zero == find_n_zero(plan.fractions);
}

PlanEvaluation evaluate_plan(const CutsetMatrix& cutsets,
                             std::span<const TestCount> tests, double alpha) {
  PlanEvaluation out;
  for (auto n : tests) out.total += n;
  out.n_min = cutset_n_min(cutsets, tests);
  out.bound = confidence_bound(out.n_min, alpha);
  return out;
}

}  // namespace cutplan
