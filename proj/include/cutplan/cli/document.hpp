#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cutplan/structure.hpp"

namespace cutplan::cli {

inline constexpr int kDocumentSchemaVersion = 1;

struct TruthTableEntry {
  std::string state;  // '0'/'1' per component, component order
  int failed = 0;

  friend bool operator==(const TruthTableEntry&, const TruthTableEntry&) = default;
};

using LabelledCutsets = std::vector<std::vector<std::string>>;
using TruthTableEntries = std::vector<TruthTableEntry>;

/// On-disk description of a system (JSON). Example:
///
///   {
///     "schema_version": 1,
///     "name": "asymmetric five-component system",
///     "components": ["C1", "C2", "C3", "C4", "C5"],
///     "cutsets": [["C1","C2"], ["C2","C3"], ["C1","C3","C4"], ["C5"]]
///   }
///
/// "truth_table" may replace "cutsets": a list of {"state": "110",
/// "failed": 1} objects covering every state exactly once.
struct StructureDocument {
  int schema_version = kDocumentSchemaVersion;
  std::vector<std::string> components;
  std::variant<LabelledCutsets, TruthTableEntries> definition;
  std::optional<std::string> name;
  std::optional<std::string> description;

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;

  /// Resolves labels and builds the validated structure. Throws ParseError
  /// for unknown labels, malformed or duplicate states, and whatever
  /// SystemStructure itself rejects.
  SystemStructure to_structure() const;
};

/// Throws ParseError on malformed JSON, a wrong schema version, missing or
/// unexpected fields.
StructureDocument parse_document(std::string_view text);

StructureDocument read_document(const std::string& path);

nlohmann::ordered_json to_json(const StructureDocument& doc);

std::string serialize_document(const StructureDocument& doc);

}  // namespace cutplan::cli
