#include "xlc/core/registry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace xlc::core {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) out.push_back(trim(field));
  return out;
}

}  // namespace

Registry Registry::load(const std::string& regions_path,
                        const std::string& languages_path,
                        const std::string& aliases_path) {
  Registry r;

  std::ifstream rf(regions_path);
  if (!rf) throw ConfigError("cannot open region registry: " + regions_path);
  std::string line;
  while (std::getline(rf, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() < 3)
      throw ConfigError("malformed region registry line: " + line);
    r.regions_.push_back({f[0], f[1], f[2]});
    r.alias_to_code_[lower(f[0])] = f[0];
    r.alias_to_code_[lower(f[1])] = f[0];
  }
  if (r.regions_.size() != 16)
    throw ConfigError("region registry must hold exactly 16 entries, got " +
                      std::to_string(r.regions_.size()));

  std::ifstream lf(languages_path);
  if (!lf) throw ConfigError("cannot open language registry: " + languages_path);
  while (std::getline(lf, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() < 2)
      throw ConfigError("malformed language registry line: " + line);
    r.languages_.push_back({f[0], f[1]});
    r.language_codes_.insert(f[0]);
  }

  if (!aliases_path.empty()) {
    std::ifstream af(aliases_path);
    if (af) {
      while (std::getline(af, line)) {
        if (trim(line).empty() || line[0] == '#') continue;
        auto f = split_tabs(line);
        if (f.size() < 2) continue;
        r.alias_to_code_[lower(f[0])] = f[1];
      }
    }
  }
  return r;
}

bool Registry::has_region(const std::string& code) const {
  return region(code) != nullptr;
}

const RegionEntry* Registry::region(const std::string& code) const {
  for (const auto& e : regions_)
    if (e.code == code) return &e;
  return nullptr;
}

bool Registry::has_language(const std::string& code) const {
  return language_codes_.count(code) > 0;
}

std::optional<std::string> Registry::normalize_origin(const std::string& raw) const {
  auto it = alias_to_code_.find(lower(trim(raw)));
  if (it == alias_to_code_.end()) return std::nullopt;
  return it->second;
}

}  // namespace xlc::core
