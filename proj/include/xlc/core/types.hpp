#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xlc::core {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lowercase two-or-three-letter language identifier ("en", "zh", "ko").
using LanguageCode = std::string;

// Two-letter region identifier plus display name. Valid codes are the 16
// registry entries; construction outside the registry is rejected there.
struct RegionCode {
  std::string code;
  std::string display_name;

  bool operator==(const RegionCode&) const = default;
};

// One culture-grounded question in English plus its local-language twin.
struct BilingualQuestionPair {
  std::string id;
  std::string english_text;
  std::string local_text;
  LanguageCode language;  // never "en"
  std::string region;     // registry code
  std::string source_id;  // seed assertion / paragraph id
};

struct Ratio {
  long num = 3;
  long den = 1;

  bool operator==(const Ratio&) const = default;
};

enum class SelectionMode { consistency, random };

inline std::string to_string(SelectionMode m) {
  return m == SelectionMode::consistency ? "consistency" : "random";
}

struct StageTemperatures {
  double paragraph = 0.7;
  double questions = 0.7;
  double answer = 0.7;   // diversity for the N samples
  double critique = 0.2;

  bool operator==(const StageTemperatures&) const = default;
};

struct RunConfig {
  int n_samples = 5;  // N; must be >= 2
  Ratio ratio_cultural_to_general{3, 1};
  std::uint64_t seed = 0;
  int max_inflight_requests = 4;
  SelectionMode consistency_mode = SelectionMode::consistency;
  bool language_filter = true;
  double sem_threshold = 0.5;  // tau in (0, 1]
  int bootstrap_iterations = 10000;
  int max_tokens = 512;
  int questions_per_paragraph = 3;
  int seed_batch_cap = 4;  // max assertions merged into one paragraph
  StageTemperatures temperatures;

  std::string regions_path = "data/regions.tsv";
  std::string languages_path = "data/languages.tsv";
  std::string region_aliases_path = "data/region_aliases.tsv";
  std::string templates_dir = "data/templates";
  std::string cache_dir;  // empty disables the on-disk cache
  std::string backend_mode = "mock";  // "mock" or "http"

  bool operator==(const RunConfig&) const = default;
};

}  // namespace xlc::core
