#include "cutplan/structure.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "cutplan/error.hpp"

namespace cutplan {

namespace {

std::string state_string(std::uint32_t state, std::size_t m) {
  std::string out(m, '0');
  for (std::size_t j = 0; j < m; ++j) {
    if (state & (1u << j)) out[j] = '1';
  }
  return out;
}

ComponentSet normalized(ComponentSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool covers(const ComponentSet& outer, const ComponentSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void validate_truth_table(const TruthTable& table, std::size_t m) {
  if (m > kMaxTruthTableComponents) {
    throw InvalidStructure("truth-table input supports at most " +
                           std::to_string(kMaxTruthTableComponents) +
                           " components; supply cutsets instead");
  }
  const std::uint32_t states = 1u << m;
  if (table.failed.size() != states) {
    throw InvalidStructure("truth table must list all " +
                           std::to_string(states) + " states, got " +
                           std::to_string(table.failed.size()));
  }
  for (auto v : table.failed) {
    if (v > 1) throw InvalidStructure("truth-table values must be 0 or 1");
  }
  // Monotonicity only needs checking along single-bit raises.
  for (std::uint32_t x = 0; x < states; ++x) {
    if (!table.failed[x]) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t y = x | (1u << j);
      if (!table.failed[y]) {
        throw NonCoherentStructure(
            "structure is not monotone: state " + state_string(x, m) +
                " fails but " + state_string(y, m) + " does not",
            x, y);
      }
    }
  }
  if (table.failed.front() == 1 || table.failed.back() == 0) {
    throw DegenerateStructure("structure function is constant");
  }
}

}  // namespace

SystemStructure::SystemStructure(std::vector<std::string> component_names,
                                 Definition definition)
    : names_(std::move(component_names)), definition_(std::move(definition)) {
  const std::size_t m = names_.size();
  if (m == 0) throw InvalidStructure("a structure needs at least one component");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InvalidStructure("component labels must be non-empty");
    if (!seen.insert(name).second) {
      throw InvalidStructure("duplicate component label '" + name + "'");
    }
  }

  if (auto* table = std::get_if<TruthTable>(&definition_)) {
    validate_truth_table(*table, m);
    return;
  }

  auto& list = std::get<CutsetList>(definition_);
  if (list.sets.empty()) {
    throw DegenerateStructure("no cutsets given; the system can never fail");
  }
  for (auto& set : list.sets) {
    set = normalized(std::move(set));
    if (set.empty()) {
      throw DegenerateStructure("an empty cutset means the system always fails");
    }
    if (set.back() >= m) {
      throw InvalidStructure("cutset refers to component index " +
                             std::to_string(set.back()) + " but m = " +
                             std::to_string(m));
    }
  }
}

bool SystemStructure::fails(const ComponentSet& failed_components) const {
  if (auto* table = std::get_if<TruthTable>(&definition_)) {
    std::uint32_t state = 0;
    for (auto j : failed_components) state |= 1u << j;
    return table->failed.at(state) != 0;
  }
  const auto x = normalized(failed_components);
  const auto& sets = std::get<CutsetList>(definition_).sets;
  return std::any_of(sets.begin(), sets.end(),
                     [&](const ComponentSet& c) { return covers(x, c); });
}

void canonicalize(std::vector<ComponentSet>& family) {
  std::sort(family.begin(), family.end());
}

CutsetMatrix CutsetMatrix::from_sets(std::size_t component_count,
                                     std::vector<ComponentSet> sets) {
  if (component_count == 0) {
    throw InvalidStructure("a cutset matrix needs at least one component");
  }
  if (sets.empty()) throw DegenerateStructure("no cutsets given");
  for (auto& set : sets) {
    set = normalized(std::move(set));
    if (set.empty()) throw DegenerateStructure("empty cutset");
    if (set.back() >= component_count) {
      throw InvalidStructure("cutset component index out of range");
    }
  }
  // Process small sets first so any superset sees its subsets already kept.
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<ComponentSet> minimal;
  for (auto& set : sets) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(),
                    [&](const ComponentSet& kept) { return covers(set, kept); });
    if (!dominated) minimal.push_back(std::move(set));
  }
  canonicalize(minimal);
  return CutsetMatrix(component_count, std::move(minimal));
}

bool CutsetMatrix::contains(std::size_t row, std::size_t component) const {
  const auto& r = rows_.at(row);
  return std::binary_search(r.begin(), r.end(), component);
}

std::vector<std::vector<std::uint8_t>> CutsetMatrix::incidence() const {
  std::vector<std::vector<std::uint8_t>> dense(
      rows_.size(), std::vector<std::uint8_t>(m_, 0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (auto j : rows_[i]) dense[i][j] = 1;
  }
  return dense;
}

std::vector<std::size_t> CutsetMatrix::irrelevant_components() const {
  std::vector<bool> used(m_, false);
  for (const auto& row : rows_) {
    for (auto j : row) used[j] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m_; ++j) {
    if (!used[j]) out.push_back(j);
  }
  return out;
}

std::string CutsetMatrix::canonical_string() const {
  std::ostringstream out;
  out << "m=" << m_;
  for (const auto& row : rows_) {
    out << ';';
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << row[k];
    }
  }
  return out.str();
}

CutsetMatrix minimal_cutsets(const SystemStructure& structure) {
  const std::size_t m = structure.component_count();
  if (auto* list = std::get_if<CutsetList>(&structure.definition())) {
    return CutsetMatrix::from_sets(m, list->sets);
  }
  // A coherent table's minimal cutsets are the failed states whose every
  // single-component repair restores the system.
  const auto& failed = std::get<TruthTable>(structure.definition()).failed;
  std::vector<ComponentSet> rows;
  for (std::uint32_t x = 0; x < failed.size(); ++x) {
    if (!failed[x]) continue;
    bool minimal = true;
    ComponentSet set;
    for (std::size_t j = 0; j < m && minimal; ++j) {
      if (!(x & (1u << j))) continue;
      set.push_back(j);
      if (failed[x & ~(1u << j)]) minimal = false;
    }
    if (minimal) rows.push_back(std::move(set));
  }
  return CutsetMatrix::from_sets(m, std::move(rows));
}

namespace {

// Backtracking enumeration of minimal hitting sets. Each branch picks the
// first cutset not yet hit and tries its admissible members in order;
// members tried by earlier siblings are excluded below, so every hitting
// set is produced at most once. A branch dies as soon as some chosen
// component stops being the sole hitter of at least one cutset, since
// adding components can never restore that.
class HittingSetSearch {
 public:
  explicit HittingSetSearch(const CutsetMatrix& cutsets)
      : rows_(cutsets.rows()),
        hits_(rows_.size(), 0),
        banned_(cutsets.component_count(), false) {}

  std::vector<ComponentSet> run() {
    recurse();
    canonicalize(found_);
    return std::move(found_);
  }

 private:
  void recurse() {
    std::size_t open = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (hits_[i] == 0) {
        open = i;
        break;
      }
    }
    if (open == rows_.size()) {
      ComponentSet result = chosen_;
      std::sort(result.begin(), result.end());
      found_.push_back(std::move(result));
      return;
    }
    std::vector<std::size_t> newly_banned;
    for (auto j : rows_[open]) {
      if (banned_[j]) continue;
      add(j);
      if (all_critical()) recurse();
      remove(j);
      banned_[j] = true;
      newly_banned.push_back(j);
    }
    for (auto j : newly_banned) banned_[j] = false;
  }

  void add(std::size_t j) {
    chosen_.push_back(j);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (std::binary_search(rows_[i].begin(), rows_[i].end(), j)) ++hits_[i];
    }
  }

  void remove(std::size_t j) {
    chosen_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (std::binary_search(rows_[i].begin(), rows_[i].end(), j)) --hits_[i];
    }
  }

  bool all_critical() const {
    for (auto j : chosen_) {
      bool has_private = false;
      for (std::size_t i = 0; i < rows_.size() && !has_private; ++i) {
        has_private = hits_[i] == 1 &&
                      std::binary_search(rows_[i].begin(), rows_[i].end(), j);
      }
      if (!has_private) return false;
    }
    return true;
  }

  const std::vector<ComponentSet>& rows_;
  std::vector<std::size_t> hits_;
  std::vector<bool> banned_;
  ComponentSet chosen_;
  std::vector<ComponentSet> found_;
};

}  // namespace

std::vector<ComponentSet> minimal_pathsets(const CutsetMatrix& cutsets) {
  return HittingSetSearch(cutsets).run();
}

std::size_t shortest_path_length(const CutsetMatrix& cutsets) {
  const auto paths = minimal_pathsets(cutsets);
  std::size_t best = cutsets.component_count();
  for (const auto& p : paths) best = std::min(best, p.size());
  return best;
}

}  // namespace cutplan
