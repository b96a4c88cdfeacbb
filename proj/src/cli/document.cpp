#include "cutplan/cli/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cutplan/error.hpp"

namespace cutplan::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "schema_version", "components", "cutsets", "truth_table", "name", "description"};

template <typename T>
T field(const json& object, const char* key, const char* what) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' must be " + what);
  }
}

std::uint32_t parse_state(const std::string& bits, std::size_t m) {
  if (bits.size() != m) {
    throw ParseError("truth-table state '" + bits + "' must have " +
                     std::to_string(m) + " bits");
  }
  std::uint32_t state = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (bits[j] == '1') {
      state |= 1u << j;
    } else if (bits[j] != '0') {
      throw ParseError("truth-table state '" + bits + "' may only contain 0 and 1");
    }
  }
  return state;
}

}  // namespace

SystemStructure StructureDocument::to_structure() const {
  if (schema_version != kDocumentSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(schema_version));
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < components.size(); ++j) index.emplace(components[j], j);

  if (const auto* cutsets = std::get_if<LabelledCutsets>(&definition)) {
    CutsetList list;
    for (const auto& labels : *cutsets) {
      ComponentSet set;
      for (const auto& label : labels) {
        auto it = index.find(label);
        if (it == index.end()) {
          throw ParseError("cutset names unknown component '" + label + "'");
        }
        set.push_back(it->second);
      }
      list.sets.push_back(std::move(set));
    }
    return SystemStructure(components, std::move(list));
  }

  const auto& entries = std::get<TruthTableEntries>(definition);
  const std::size_t m = components.size();
  if (m > kMaxTruthTableComponents) {
    throw InvalidStructure("truth-table input supports at most " +
                           std::to_string(kMaxTruthTableComponents) + " components");
  }
  const std::uint32_t states = 1u << m;
  std::vector<int> seen(states, -1);
  for (const auto& entry : entries) {
    const std::uint32_t state = parse_state(entry.state, m);
    if (entry.failed != 0 && entry.failed != 1) {
      throw ParseError("truth-table 'failed' must be 0 or 1");
    }
    if (seen[state] != -1) throw ParseError("state '" + entry.state + "' listed twice");
    seen[state] = entry.failed;
  }
  TruthTable table;
  table.failed.reserve(states);
  for (std::uint32_t x = 0; x < states; ++x) {
    if (seen[x] == -1) {
      std::string bits(m, '0');
      for (std::size_t j = 0; j < m; ++j) {
        if (x & (1u << j)) bits[j] = '1';
      }
      throw ParseError("truth table is missing state '" + bits + "'");
    }
    table.failed.push_back(static_cast<std::uint8_t>(seen[x]));
  }
  return SystemStructure(components, std::move(table));
}

StructureDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("structure document must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (!kKnownKeys.contains(key)) throw ParseError("unexpected field '" + key + "'");
  }

  StructureDocument doc;
  doc.schema_version = field<int>(root, "schema_version", "an integer");
  if (doc.schema_version != kDocumentSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(doc.schema_version));
  }
  doc.components = field<std::vector<std::string>>(root, "components", "a list of labels");
  if (root.contains("name")) doc.name = field<std::string>(root, "name", "a string");
  if (root.contains("description")) {
    doc.description = field<std::string>(root, "description", "a string");
  }

  const bool has_cutsets = root.contains("cutsets");
  const bool has_table = root.contains("truth_table");
  if (has_cutsets == has_table) {
    throw ParseError("exactly one of 'cutsets' or 'truth_table' is required");
  }
  if (has_cutsets) {
    doc.definition = field<LabelledCutsets>(root, "cutsets", "a list of label lists");
  } else {
    const auto& table = root.at("truth_table");
    if (!table.is_array()) throw ParseError("field 'truth_table' must be a list");
    TruthTableEntries entries;
    for (const auto& row : table) {
      if (!row.is_object() || row.size() != 2) {
        throw ParseError("truth-table rows must be {\"state\": ..., \"failed\": ...}");
      }
      entries.push_back({field<std::string>(row, "state", "a bit string"),
                         field<int>(row, "failed", "0 or 1")});
    }
    doc.definition = std::move(entries);
  }
  return doc;
}

StructureDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

nlohmann::ordered_json to_json(const StructureDocument& doc) {
  nlohmann::ordered_json out;
  out["schema_version"] = doc.schema_version;
  if (doc.name) out["name"] = *doc.name;
  if (doc.description) out["description"] = *doc.description;
  out["components"] = doc.components;
  if (const auto* cutsets = std::get_if<LabelledCutsets>(&doc.definition)) {
    out["cutsets"] = *cutsets;
  } else {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& entry : std::get<TruthTableEntries>(doc.definition)) {
      rows.push_back({{"state", entry.state}, {"failed", entry.failed}});
    }
    out["truth_table"] = std::move(rows);
  }
  return out;
}

std::string serialize_document(const StructureDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

}  // namespace cutplan::cli
