#include "cutplan/simplex.hpp"

#include <atomic>
#include <optional>
#include <stdexcept>

#include "cutplan/error.hpp"

namespace cutplan {

namespace {

std::atomic<std::uint64_t> g_solve_count{0};

class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : m_(p.variable_count()), s_(p.constraint_count()) {
    std::size_t artificials = 0;
    for (const auto& b : p.rhs) {
      if (b > 0) ++artificials;
    }
    columns_ = m_ + s_ + artificials;
    rows_.assign(s_, std::vector<Rational>(columns_));
    rhs_.resize(s_);
    basis_.resize(s_);

    std::size_t next_artificial = m_ + s_;
    for (std::size_t i = 0; i < s_; ++i) {
      const bool positive = p.rhs[i] > 0;
      const int sign = positive ? 1 : -1;
      for (std::size_t j = 0; j < m_; ++j) {
        rows_[i][j] = sign * p.constraint_matrix[i][j];
      }
      rows_[i][m_ + i] = -sign;
      rhs_[i] = sign * p.rhs[i];
      if (positive) {
        rows_[i][next_artificial] = 1;
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = m_ + i;
      }
    }
  }

  bool has_artificials() const { return columns_ > m_ + s_; }
  std::size_t column_count() const { return columns_; }

  /// Loads a cost over all current columns and prices out the basis.
  void set_cost(std::vector<Rational> cost) {
    cost_ = std::move(cost);
    reduced_ = cost_;
    objective_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < columns_; ++j) reduced_[j] -= cb * rows_[i][j];
      objective_ += cb * rhs_[i];
    }
  }

  /// Runs Bland-rule pivots to optimality. Returns false when unbounded.
  bool optimize(std::size_t& pivots) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  /// After a successful phase 1: pivots zero-level artificials out of the
  /// basis, drops rows that turn out redundant, then drops artificial
  /// columns.
  void expel_artificials(std::size_t& pivots) {
    const std::size_t real = m_ + s_;
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < real) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < real; ++j) {
        if (rows_[i][j] != 0) {
          column = j;
          break;
        }
      }
      if (column) {
        pivot(i, *column);
        ++pivots;
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& row : rows_) row.resize(real);
    columns_ = real;
  }

  const Rational& objective() const { return objective_; }
  const Rational& reduced_cost(std::size_t j) const { return reduced_[j]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(m_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < m_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  bool is_basic(std::size_t column) const {
    for (auto b : basis_) {
      if (b == column) return true;
    }
    return false;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const Rational factor = rows_[i][c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
      }
      rhs_[i] -= factor * rhs_[r];
    }
    const Rational factor = reduced_[c];
    if (factor != 0) {
      for (std::size_t j = 0; j < columns_; ++j) {
        if (rows_[r][j] != 0) reduced_[j] -= factor * rows_[r][j];
      }
      objective_ += factor * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t s_;
  std::size_t columns_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  Rational objective_;
};

}  // namespace

void LpProblem::validate() const {
  const std::size_t m = cost.size();
  const std::size_t s = rhs.size();
  if (m == 0 || s == 0) {
    throw std::invalid_argument("LP needs at least one variable and one constraint");
  }
  if (constraint_matrix.size() != s) {
    throw std::invalid_argument("constraint matrix row count does not match rhs");
  }
  for (const auto& row : constraint_matrix) {
    if (row.size() != m) {
      throw std::invalid_argument("constraint matrix row length does not match cost");
    }
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

std::uint64_t lp_solve_count() noexcept { return g_solve_count.load(); }

LpSolution solve_lp(const LpProblem& problem) {
  problem.validate();
  ++g_solve_count;

  const std::size_t m = problem.variable_count();
  const std::size_t s = problem.constraint_count();
  Tableau tableau(problem);
  LpSolution result;

  if (tableau.has_artificials()) {
    std::vector<Rational> phase1(tableau.column_count());
    for (std::size_t j = m + s; j < phase1.size(); ++j) phase1[j] = 1;
    tableau.set_cost(std::move(phase1));
    // Phase 1 is bounded below by zero.
    tableau.optimize(result.pivots);
    if (tableau.objective() > 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    tableau.expel_artificials(result.pivots);
  }

  std::vector<Rational> phase2(m + s);
  for (std::size_t j = 0; j < m; ++j) phase2[j] = problem.cost[j];
  tableau.set_cost(std::move(phase2));
  if (!tableau.optimize(result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.objective = tableau.objective();
  result.variables = tableau.primal();
  // The reduced cost of surplus column i equals the multiplier of row i.
  result.duals.resize(s);
  for (std::size_t i = 0; i < s; ++i) result.duals[i] = tableau.reduced_cost(m + i);
  for (std::size_t j = 0; j < m + s; ++j) {
    if (!tableau.is_basic(j) && tableau.reduced_cost(j) == 0) {
      result.zero_reduced_cost_nonbasic = true;
      break;
    }
  }

  if (!certifies_optimality(problem, result)) {
    throw InternalInvariantViolation(
        "simplex optimum failed its exact duality certificate");
  }
  return result;
}

bool certifies_optimality(const LpProblem& problem, const LpSolution& solution) {
  if (solution.status != LpStatus::kOptimal) return false;
  const std::size_t m = problem.variable_count();
  const std::size_t s = problem.constraint_count();
  if (solution.variables.size() != m || solution.duals.size() != s) return false;

  Rational primal_objective;
  for (std::size_t j = 0; j < m; ++j) {
    if (solution.variables[j] < 0) return false;
    primal_objective += problem.cost[j] * solution.variables[j];
  }
  if (primal_objective != solution.objective) return false;
  for (std::size_t i = 0; i < s; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < m; ++j) {
      lhs += problem.constraint_matrix[i][j] * solution.variables[j];
    }
    if (lhs < problem.rhs[i]) return false;
  }

  Rational dual_objective;
  for (std::size_t i = 0; i < s; ++i) {
    if (solution.duals[i] < 0) return false;
    dual_objective += problem.rhs[i] * solution.duals[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    Rational column;
    for (std::size_t i = 0; i < s; ++i) {
      column += solution.duals[i] * problem.constraint_matrix[i][j];
    }
    if (column > problem.cost[j]) return false;
  }
  return dual_objective == solution.objective;
}

}  // namespace cutplan
