#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cutplan/rational.hpp"

namespace cutplan {

/// minimize cost . x  subject to  A x >= rhs,  x >= 0.
struct LpProblem {
  std::vector<Rational> cost;
  std::vector<std::vector<Rational>> constraint_matrix;
  std::vector<Rational> rhs;

  std::size_t variable_count() const noexcept { return cost.size(); }
  std::size_t constraint_count() const noexcept { return rhs.size(); }

  /// Throws std::invalid_argument on inconsistent dimensions or s, m == 0.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> variables;
  /// Row multipliers y >= 0 with y^T A <= cost^T and rhs . y == objective.
  /// Only populated when optimal.
  std::vector<Rational> duals;
  /// Some nonbasic column has zero reduced cost at the optimum, so other
  /// optimal vertices may exist.
  bool zero_reduced_cost_nonbasic = false;
  std::size_t pivots = 0;
};

/// Two-phase tableau simplex in exact arithmetic with Bland's rule.
///
/// Rows with positive rhs start on an artificial variable; the rest start
/// on their surplus column after negation. Phase 1 drives artificials to
/// zero (or reports infeasibility), redundant rows are dropped, and phase 2
/// optimizes the real cost. Bland's smallest-index rule on both entering
/// and leaving choices makes the run deterministic and cycle-free.
///
/// Every optimal result is checked against its dual certificate before
/// returning; a mismatch throws InternalInvariantViolation.
LpSolution solve_lp(const LpProblem& problem);

/// Number of solve_lp calls in this process. Tests use it to prove that
/// cached plans never touch the solver.
std::uint64_t lp_solve_count() noexcept;

/// True iff `duals` certifies `solution` optimal for `problem`: duals are
/// nonnegative, dual-feasible, and rhs . duals equals the primal objective,
/// while the primal point is feasible with matching objective.
bool certifies_optimality(const LpProblem& problem, const LpSolution& solution);

}  // namespace cutplan
