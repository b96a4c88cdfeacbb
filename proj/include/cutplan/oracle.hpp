#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutplan/planner.hpp"
#include "cutplan/simplex.hpp"
#include "cutplan/structure.hpp"

// Exhaustive reference solvers. Exponential on purpose: they exist to
// certify the LP route on small instances, never to replace it.
namespace cutplan::oracle {

inline constexpr std::uint64_t kDefaultAllocationCap = 50'000'000;
inline constexpr std::size_t kWitnessCap = 32;
inline constexpr std::size_t kMaxVertexConstraints = 18;

struct OracleResult {
  TestCount best_n_min = 0;
  std::vector<std::vector<TestCount>> witness_plans;  // lexicographic, capped
  std::uint64_t instances_searched = 0;  // size of the allocation space
};

/// C(n_total + m - 1, m - 1), saturating at UINT64_MAX.
std::uint64_t allocation_count(std::size_t components, TestCount n_total);

/// Best achievable N_min over every nonnegative integer allocation of
/// exactly `n_total` tests. Throws SearchSpaceTooLarge when the number of
/// allocations exceeds `cap`.
OracleResult brute_force_plan(const CutsetMatrix& cutsets, TestCount n_total,
                              std::uint64_t cap = kDefaultAllocationCap);

struct VertexResult {
  LpStatus status = LpStatus::kInfeasible;  // never kUnbounded
  Rational objective;
  std::vector<Rational> best_vertex;
  std::uint64_t bases_tried = 0;
};

/// Minimum of cost . x over every basic feasible solution, found by
/// solving each choice of m tight constraints among the s rows and m
/// bounds. Requires s + m <= 18 (TooManyConstraints) and a nonnegative
/// cost vector, which keeps the objective bounded on the feasible region.
VertexResult enumerate_lp_vertices(const LpProblem& problem);

/// The straightforward N0 search: smallest k >= 1 with every k * f_j
/// integral. Gives up (nullopt) past `limit`.
std::optional<std::uint64_t> increment_n_zero(
    std::span<const Rational> fractions, std::uint64_t limit = 100'000'000);

}  // namespace cutplan::oracle
