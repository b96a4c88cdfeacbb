#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cutplan/rational.hpp"
#include "cutplan/simplex.hpp"
#include "cutplan/structure.hpp"

namespace cutplan {

using TestCount = std::uint64_t;

/// Optimal test proportions in the continuous domain.
struct FractionPlan {
  std::vector<Rational> fractions;  // f_j, sums to 1
  Rational cutset_fraction;         // g, minimum cutset share of the tests
  BigInt n_zero;                    // smallest N with every f_j * N integral
  bool alternative_optima = false;  // solver saw a zero reduced cost off-basis

  friend bool operator==(const FractionPlan&, const FractionPlan&) = default;
};

struct IntegerPlan {
  std::vector<TestCount> tests;  // n_j
  TestCount n_requested = 0;     // N
  TestCount n_minus = 0;         // N - (N mod N0)
  TestCount n_plus = 0;          // n_minus + N0
  TestCount remainder = 0;       // N mod N0
  TestCount n_min = 0;           // least tests landing on any minimal cutset
  bool remainder_distributed = false;

  friend bool operator==(const IntegerPlan&, const IntegerPlan&) = default;
};

struct BoundResult {
  double alpha = 0.05;
  TestCount n_min = 0;
  double q_upper = 1.0;
};

struct PathStrategyReport {
  std::size_t shortest_path = 0;  // P
  Rational cutset_fraction;       // g
  Rational path_fraction;         // 1/P
  Rational gap;                   // g - 1/P, never negative
  // floor(N / P), the N_min reached by spreading N evenly over one shortest
  // path. Zero when no budget was given.
  TestCount path_strategy_n_min = 0;
};

/// The LP behind optimize_fractions: min sum(h) s.t. Y h >= 1, h >= 0.
LpProblem fraction_lp(const CutsetMatrix& cutsets);

/// Solves the fraction LP and recovers f = h / H, g = 1 / H and N0.
/// Throws InternalInvariantViolation if the result breaks any of the
/// guarantees a valid cutset matrix implies.
FractionPlan optimize_fractions(const CutsetMatrix& cutsets);

/// LCM of the denominators. Equivalent to the smallest k >= 1 for which
/// every k * f_j is an integer.
BigInt find_n_zero(std::span<const Rational> fractions);

/// Scales the fraction plan to N- = N - (N mod N0) total tests. Leftover
/// tests stay unallocated unless `distribute_remainder` is set, in which
/// case they go round-robin from component 0. n_min always reflects the
/// emitted allocation.
///
/// Throws BudgetTooSmall if N < N0.
IntegerPlan integer_plan(const FractionPlan& plan, const CutsetMatrix& cutsets,
                         TestCount n_requested,
                         bool distribute_remainder = false);

/// min over minimal cutsets of the tests landing on that cutset.
TestCount cutset_n_min(const CutsetMatrix& cutsets,
                       std::span<const TestCount> tests);

/// q = min(ln(1/alpha) / n_min, 1); q = 1 when n_min = 0.
/// Throws InvalidAlpha unless 0 < alpha < 1.
BoundResult confidence_bound(TestCount n_min, double alpha);

/// Compares g with 1/P. Throws InternalInvariantViolation if g < 1/P.
PathStrategyReport shortest_path_check(const FractionPlan& plan,
                                       const CutsetMatrix& cutsets,
                                       TestCount n_requested = 0);

/// Checks the FractionPlan invariants against `cutsets`: nonnegative
/// fractions summing to 1, g equal to the smallest cutset share, and N0
/// equal to the LCM of the denominators. Used for cache validation.
bool is_consistent(const FractionPlan& plan, const CutsetMatrix& cutsets);

struct PlanEvaluation {
  TestCount total = 0;
  TestCount n_min = 0;
  BoundResult bound;
};

/// Applies the N_min and bound formulas to an arbitrary plan.
PlanEvaluation evaluate_plan(const CutsetMatrix& cutsets,
                             std::span<const TestCount> tests, double alpha);

}  // namespace cutplan
