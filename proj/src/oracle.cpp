#include "cutplan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "cutplan/error.hpp"

namespace cutplan::oracle {

std::uint64_t allocation_count(std::size_t components, TestCount n_total) {
  if (components == 0) return n_total == 0 ? 1 : 0;
  // C(n + k, k) with k = components - 1, built up as a running product.
  const std::uint64_t k = components - 1;
  BigInt count = 1;
  const BigInt cap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    count = count * (BigInt(n_total) + i) / i;
    if (count > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return count.convert_to<std::uint64_t>();
}

namespace {

class AllocationSearch {
 public:
  AllocationSearch(const CutsetMatrix& cutsets, TestCount total)
      : cutsets_(cutsets),
        total_(total),
        m_(cutsets.component_count()),
        row_sums_(cutsets.cutset_count(), 0),
        rows_of_(m_),
        plan_(m_, 0) {
    for (std::size_t i = 0; i < cutsets.cutset_count(); ++i) {
      for (auto j : cutsets.rows()[i]) rows_of_[j].push_back(i);
    }
  }

  OracleResult run() {
    recurse(0, total_);
    result_.best_n_min = best_;
    return std::move(result_);
  }

 private:
  // Best N_min still reachable when components [depth, m) share `left`.
  TestCount optimistic(std::size_t depth, TestCount left) const {
    TestCount bound = std::numeric_limits<TestCount>::max();
    for (std::size_t i = 0; i < row_sums_.size(); ++i) {
      const bool open = cutsets_.rows()[i].back() >= depth;
      bound = std::min(bound, row_sums_[i] + (open ? left : 0));
    }
    return bound;
  }

  void assign(std::size_t j, TestCount amount, bool add) {
    for (auto i : rows_of_[j]) {
      if (add) {
        row_sums_[i] += amount;
      } else {
        row_sums_[i] -= amount;
      }
    }
  }

  void recurse(std::size_t depth, TestCount left) {
    if (have_best_ && optimistic(depth, left) < best_) return;
    if (depth + 1 == m_) {
      plan_[depth] = left;
      assign(depth, left, true);
      record();
      assign(depth, left, false);
      return;
    }
    for (TestCount n = 0; n <= left; ++n) {
      plan_[depth] = n;
      assign(depth, n, true);
      recurse(depth + 1, left - n);
      assign(depth, n, false);
    }
    plan_[depth] = 0;
  }

  void record() {
    const TestCount value = *std::min_element(row_sums_.begin(), row_sums_.end());
    if (!have_best_ || value > best_) {
      best_ = value;
      have_best_ = true;
      result_.witness_plans.clear();
    }
    if (value == best_ && result_.witness_plans.size() < kWitnessCap) {
      result_.witness_plans.push_back(plan_);
    }
  }

  const CutsetMatrix& cutsets_;
  TestCount total_;
  std::size_t m_;
  std::vector<TestCount> row_sums_;
  std::vector<std::vector<std::size_t>> rows_of_;
  std::vector<TestCount> plan_;
  TestCount best_ = 0;
  bool have_best_ = false;
  OracleResult result_;
};

// Solves the square system M x = v exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> matrix, std::vector<Rational> values) {
  const std::size_t n = values.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && matrix[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(matrix[pivot], matrix[col]);
    std::swap(values[pivot], values[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col] / matrix[col][col];
      for (std::size_t c = col; c < n; ++c) matrix[r][c] -= factor * matrix[col][c];
      values[r] -= factor * values[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) values[r] /= matrix[r][r];
  return values;
}

}  // namespace

OracleResult brute_force_plan(const CutsetMatrix& cutsets, TestCount n_total,
                              std::uint64_t cap) {
  const std::uint64_t space = allocation_count(cutsets.component_count(), n_total);
  if (space > cap) {
    throw SearchSpaceTooLarge("allocation space has " + std::to_string(space) +
                              " plans, cap is " + std::to_string(cap));
  }
  OracleResult result = AllocationSearch(cutsets, n_total).run();
  result.instances_searched = space;
  return result;
}

VertexResult enumerate_lp_vertices(const LpProblem& problem) {
  problem.validate();
  const std::size_t m = problem.variable_count();
  const std::size_t s = problem.constraint_count();
  if (s + m > kMaxVertexConstraints) {
    throw TooManyConstraints("vertex enumeration needs s + m <= " +
                             std::to_string(kMaxVertexConstraints) + ", got " +
                             std::to_string(s + m));
  }
  for (const auto& c : problem.cost) {
    if (c < 0) throw std::invalid_argument("vertex enumeration needs a nonnegative cost");
  }

  VertexResult result;
  const std::uint32_t constraints = static_cast<std::uint32_t>(s + m);
  for (std::uint32_t mask = 0; mask < (1u << constraints); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    ++result.bases_tried;

    // Bits [0, s) pick tight rows, bits [s, s + m) pick x_j = 0.
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> values;
    for (std::uint32_t k = 0; k < constraints; ++k) {
      if (!(mask & (1u << k))) continue;
      if (k < s) {
        matrix.push_back(problem.constraint_matrix[k]);
        values.push_back(problem.rhs[k]);
      } else {
        std::vector<Rational> unit(m);
        unit[k - s] = 1;
        matrix.push_back(std::move(unit));
        values.emplace_back(0);
      }
    }
    auto x = solve_square(std::move(matrix), std::move(values));
    if (!x) continue;

    bool feasible = std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; });
    for (std::size_t i = 0; i < s && feasible; ++i) {
      Rational lhs;
      for (std::size_t j = 0; j < m; ++j) lhs += problem.constraint_matrix[i][j] * (*x)[j];
      feasible = lhs >= problem.rhs[i];
    }
    if (!feasible) continue;

    Rational objective;
    for (std::size_t j = 0; j < m; ++j) objective += problem.cost[j] * (*x)[j];
    if (result.status != LpStatus::kOptimal || objective < result.objective) {
      result.status = LpStatus::kOptimal;
      result.objective = objective;
      result.best_vertex = std::move(*x);
    }
  }
  return result;
}

std::optional<std::uint64_t> increment_n_zero(std::span<const Rational> fractions,
                                              std::uint64_t limit) {
  // k * p / q is integral iff q divides k * p; track k * p mod q incrementally.
  std::vector<std::uint64_t> step, modulus;
  for (const auto& f : fractions) {
    const BigInt q = denominator(f);
    if (q > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("increment search needs denominators below 2^32");
    }
    BigInt p = numerator(f) % q;
    if (p < 0) p += q;
    step.push_back(p.convert_to<std::uint64_t>());
    modulus.push_back(q.convert_to<std::uint64_t>());
  }
  std::vector<std::uint64_t> residue(step.size(), 0);
  for (std::uint64_t k = 1; k <= limit; ++k) {
    bool all_integral = true;
    for (std::size_t j = 0; j < step.size(); ++j) {
      residue[j] = (residue[j] + step[j]) % modulus[j];
      all_integral = all_integral && residue[j] == 0;
    }
    if (all_integral) return k;
  }
  return std::nullopt;
}

}  // namespace cutplan::oracle
