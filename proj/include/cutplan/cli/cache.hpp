#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cutplan/planner.hpp"
#include "cutplan/structure.hpp"

namespace cutplan::cli {

/// SHA-256 (hex) of CutsetMatrix::canonical_string(). Labels and input
/// form do not enter the digest, so a truth table and the equivalent
/// cutset list share one hash.
std::string structure_hash(const CutsetMatrix& cutsets);

/// Directory of solved fraction plans, one JSON file per structure hash.
/// Entries hold exact fraction strings plus the matrix they were solved
/// for; an entry that fails to parse, belongs to another matrix, or breaks
/// the FractionPlan invariants is treated as a miss.
class PlanCache {
 public:
  explicit PlanCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const noexcept { return directory_; }
  std::filesystem::path entry_path(const CutsetMatrix& cutsets) const;

  /// Appends a warning for every corrupt entry it skips.
  std::optional<FractionPlan> lookup(const CutsetMatrix& cutsets,
                                     std::vector<std::string>& warnings) const;

  /// Writes through a temporary file and rename, so readers never see a
  /// half-written entry.
  void store(const CutsetMatrix& cutsets, const FractionPlan& plan) const;

 private:
  std::filesystem::path directory_;
};

/// --cache-dir if given, else $CUTPLAN_CACHE_DIR, else
/// $XDG_CACHE_HOME/cutplan, else ~/.cache/cutplan.
std::filesystem::path default_cache_directory(
    const std::optional<std::string>& flag_value);

}  // namespace cutplan::cli
