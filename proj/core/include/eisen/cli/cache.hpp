#pragma once

#include "eisen/hecke/eisenstein.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace eisen {

inline constexpr int kCacheSchema = 1;

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const PresentationData& d);
PresentationData presentation_from_json(const nlohmann::json& j);

struct CacheEntry {
  int schema = kCacheSchema;
  std::string key;
  PresentationData data;
  OperatorTable operators;
};

std::string cache_key(int64_t N, const SpaceOptions& opts);
std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key);

nlohmann::json cache_entry_to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const nlohmann::json& j);

// Atomic: written to a temporary file in `dir`, then renamed.
void save_cache(const std::filesystem::path& dir, const CacheEntry& e);
// nullopt if absent; CacheError if present but unreadable or for another key.
std::optional<CacheEntry> load_cache(const std::filesystem::path& dir, const std::string& key);

}  // namespace eisen
