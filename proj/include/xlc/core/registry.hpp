#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "xlc/core/types.hpp"

namespace xlc::core {

struct RegionEntry {
  std::string code;
  std::string display_name;
  LanguageCode language;  // primary local language of the region
};

struct LanguageEntry {
  std::string code;
  std::string display_name;
};

// Region/language registry loaded from tab-separated data files. The region
// set is closed: every region code used anywhere in the system must resolve
// here. The region->language mapping for shared languages (ES/MX Spanish,
// KR/KP Korean) is externally sourced from the benchmark definition.
class Registry {
 public:
  static Registry load(const std::string& regions_path,
                       const std::string& languages_path,
                       const std::string& aliases_path = "");

  const std::vector<RegionEntry>& regions() const { return regions_; }
  const std::vector<LanguageEntry>& languages() const { return languages_; }

  bool has_region(const std::string& code) const;
  bool has_language(const std::string& code) const;
  const RegionEntry* region(const std::string& code) const;

  // Normalizes a free-form origin string ("South Korea", "kr", "S. Korea")
  // to a registry code. Unmatched origins return nullopt; callers quarantine
  // rather than guess.
  std::optional<std::string> normalize_origin(const std::string& raw) const;

 private:
  std::vector<RegionEntry> regions_;
  std::vector<LanguageEntry> languages_;
  std::unordered_map<std::string, std::string> alias_to_code_;  // lowercased alias
  std::unordered_set<std::string> language_codes_;
};

}  // namespace xlc::core
