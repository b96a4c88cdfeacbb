#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cutplan {

/// Sorted, duplicate-free list of 0-based component indices.
using ComponentSet = std::vector<std::size_t>;

/// Largest m accepted for truth-table input (2^m states are enumerated).
inline constexpr std::size_t kMaxTruthTableComponents = 20;

/// phi over m components, one entry per state. State bit j set means
/// component j has failed; entry value 1 means the system fails.
struct TruthTable {
  std::vector<std::uint8_t> failed;
};

/// phi(x) = 1 iff x covers at least one listed set.
struct CutsetList {
  std::vector<ComponentSet> sets;
};

/// Coherent structure function over named components.
///
/// Construction validates everything except minimality: labels are unique
/// and m >= 1, phi is not constant, and a truth table is monotone
/// (NonCoherentStructure carries a witness otherwise).
class SystemStructure {
 public:
  using Definition = std::variant<TruthTable, CutsetList>;

  SystemStructure(std::vector<std::string> component_names,
                  Definition definition);

  std::size_t component_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& component_names() const noexcept {
    return names_;
  }
  const Definition& definition() const noexcept { return definition_; }

  /// phi(x) for a state given as a component set.
  bool fails(const ComponentSet& failed_components) const;

 private:
  std::vector<std::string> names_;
  Definition definition_;
};

/// s x m incidence matrix of minimal cutsets in canonical row order
/// (lexicographic over each row's sorted component indices).
class CutsetMatrix {
 public:
  /// Minimizes and canonicalizes `sets`: drops duplicates and supersets.
  /// Throws InvalidStructure on out-of-range indices or m == 0, and
  /// DegenerateStructure on an empty family or an empty set.
  static CutsetMatrix from_sets(std::size_t component_count,
                                std::vector<ComponentSet> sets);

  std::size_t component_count() const noexcept { return m_; }
  std::size_t cutset_count() const noexcept { return rows_.size(); }
  const std::vector<ComponentSet>& rows() const noexcept { return rows_; }

  bool contains(std::size_t row, std::size_t component) const;

  /// Dense 0/1 rows, y[i][j].
  std::vector<std::vector<std::uint8_t>> incidence() const;

  /// Components that belong to no minimal cutset.
  std::vector<std::size_t> irrelevant_components() const;

  /// "m=<m>;<row>;<row>..." with rows as comma-separated indices. Two
  /// matrices are equal iff their canonical strings are equal.
  std::string canonical_string() const;

  friend bool operator==(const CutsetMatrix&, const CutsetMatrix&) = default;

 private:
  CutsetMatrix(std::size_t m, std::vector<ComponentSet> rows)
      : m_(m), rows_(std::move(rows)) {}

  std::size_t m_ = 0;
  std::vector<ComponentSet> rows_;
};

CutsetMatrix minimal_cutsets(const SystemStructure& structure);

/// All inclusion-minimal component sets meeting every minimal cutset, in
/// canonical order.
std::vector<ComponentSet> minimal_pathsets(const CutsetMatrix& cutsets);

std::size_t shortest_path_length(const CutsetMatrix& cutsets);

/// Sorts a family of sets into canonical order.
void canonicalize(std::vector<ComponentSet>& family);

}  // namespace cutplan
