#include "cutplan/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "cutplan/rational.hpp"

namespace cutplan::cli {

namespace {

constexpr int kCacheSchemaVersion = 1;
constexpr const char* kSolverProvenance =
    "exact rational two-phase tableau simplex, Bland's rule";

nlohmann::ordered_json rows_json(const CutsetMatrix& cutsets) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : cutsets.rows()) rows.push_back(row);
  return rows;
}

}  // namespace

std::string structure_hash(const CutsetMatrix& cutsets) {
  const std::string canonical = cutsets.canonical_string();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest, &length,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int k = 0; k < length; ++k) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  }
  return hex.str();
}

PlanCache::PlanCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {}

std::filesystem::path PlanCache::entry_path(const CutsetMatrix& cutsets) const {
  return directory_ / (structure_hash(cutsets) + ".json");
}

std::optional<FractionPlan> PlanCache::lookup(const CutsetMatrix& cutsets,
                                              std::vector<std::string>& warnings) const {
  const auto path = entry_path(cutsets);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  try {
    const auto entry = nlohmann::json::parse(in);
    if (entry.at("schema_version").get<int>() != kCacheSchemaVersion ||
        entry.at("structure_hash").get<std::string>() != structure_hash(cutsets) ||
        entry.at("components").get<std::size_t>() != cutsets.component_count() ||
        entry.at("cutsets").get<std::vector<ComponentSet>>() != cutsets.rows()) {
      throw std::runtime_error("entry describes a different structure");
    }
    FractionPlan plan;
    for (const auto& f : entry.at("fractions")) {
      plan.fractions.push_back(parse_fraction(f.get<std::string>()));
    }
    plan.cutset_fraction = parse_fraction(entry.at("cutset_fraction").get<std::string>());
    plan.n_zero = BigInt(entry.at("n_zero").get<std::string>());
    plan.alternative_optima = entry.at("alternative_optima").get<bool>();
    if (!is_consistent(plan, cutsets)) {
      throw std::runtime_error("stored plan violates its invariants");
    }
    return plan;
  } catch (const std::exception& e) {
    warnings.push_back("ignoring corrupt cache entry " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

void PlanCache::store(const CutsetMatrix& cutsets, const FractionPlan& plan) const {
  std::filesystem::create_directories(directory_);
  nlohmann::ordered_json entry;
  entry["schema_version"] = kCacheSchemaVersion;
  entry["structure_hash"] = structure_hash(cutsets);
  entry["components"] = cutsets.component_count();
  entry["cutsets"] = rows_json(cutsets);
  auto fractions = nlohmann::ordered_json::array();
  for (const auto& f : plan.fractions) fractions.push_back(to_fraction_string(f));
  entry["fractions"] = std::move(fractions);
  entry["cutset_fraction"] = to_fraction_string(plan.cutset_fraction);
  entry["n_zero"] = plan.n_zero.str();
  entry["alternative_optima"] = plan.alternative_optima;
  entry["solver"] = kSolverProvenance;

  const auto target = entry_path(cutsets);
  auto temporary = target;
  temporary += ".tmp";
  {
    std::ofstream out(temporary, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + temporary.string());
    out << entry.dump(2) << "\n";
  }
  std::filesystem::rename(temporary, target);
}

std::filesystem::path default_cache_directory(const std::optional<std::string>& flag_value) {
  if (flag_value && !flag_value->empty()) return *flag_value;
  if (const char* env = std::getenv("CUTPLAN_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "cutplan";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "cutplan";
  }
  return std::filesystem::path(".cutplan-cache");
}

}  // namespace cutplan::cli
