#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cutplan/structure.hpp"

namespace cutplan::testing {

inline std::vector<std::string> labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= m; ++j) out.push_back("C" + std::to_string(j));
  return out;
}

// Cutsets of the asymmetric five-component example: {C1,C2}, {C2,C3},
// {C1,C3,C4}, {C5}.
inline CutsetMatrix asymmetric_example() {
  return CutsetMatrix::from_sets(5, {{0, 1}, {1, 2}, {0, 2, 3}, {4}});
}

inline CutsetMatrix two_out_of_three() {
  return CutsetMatrix::from_sets(3, {{0, 1}, {0, 2}, {1, 2}});
}

inline CutsetMatrix series(std::size_t m) {
  std::vector<ComponentSet> sets;
  for (std::size_t j = 0; j < m; ++j) sets.push_back({j});
  return CutsetMatrix::from_sets(m, std::move(sets));
}

inline std::vector<ComponentSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<ComponentSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    ComponentSet set;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) set.push_back(j);
    }
    out.push_back(std::move(set));
  }
  return out;
}

// k-out-of-n vote: the system fails once k components fail, so the minimal
// cutsets are all k-subsets.
inline CutsetMatrix k_out_of_n(std::size_t k, std::size_t n) {
  return CutsetMatrix::from_sets(n, subsets_of_size(n, k));
}

// Truth table of the structure whose failure sets are upward closures of
// `sets`.
inline TruthTable truth_table_of(std::size_t m, const std::vector<ComponentSet>& sets) {
  TruthTable table;
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    bool fails = false;
    for (const auto& set : sets) {
      bool covered = true;
      for (auto j : set) covered = covered && (x & (1u << j));
      fails = fails || covered;
    }
    table.failed.push_back(fails ? 1 : 0);
  }
  return table;
}

// Random coherent structure: up to `max_sets` random nonempty subsets of
// m components, minimized.
inline CutsetMatrix random_structure(std::mt19937_64& rng, std::size_t m,
                                     std::size_t max_sets) {
  std::uniform_int_distribution<std::size_t> count(1, max_sets);
  std::uniform_int_distribution<std::uint32_t> mask(1, (1u << m) - 1);
  std::vector<ComponentSet> sets;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    const auto bits = mask(rng);
    ComponentSet set;
    for (std::size_t j = 0; j < m; ++j) {
      if (bits & (1u << j)) set.push_back(j);
    }
    sets.push_back(std::move(set));
  }
  return CutsetMatrix::from_sets(m, std::move(sets));
}

}  // namespace cutplan::testing
