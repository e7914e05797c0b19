#include "xlc/core/config.hpp"

#include <fstream>

namespace xlc::core {

using nlohmann::json;

Ratio parse_ratio(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("ratio must be of the form \"N:M\", got \"" + text + "\"");
  Ratio r;
  try {
    r.num = std::stol(text.substr(0, colon));
    r.den = std::stol(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ConfigError("ratio must be of the form \"N:M\", got \"" + text + "\"");
  }
  if (r.num <= 0 || r.den <= 0)
    throw ConfigError("ratio components must be positive");
  return r;
}

namespace {

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  read(j, "n_samples", cfg.n_samples);
  if (j.contains("ratio")) cfg.ratio_cultural_to_general = parse_ratio(j.at("ratio").get<std::string>());
  read(j, "seed", cfg.seed);
  read(j, "max_inflight_requests", cfg.max_inflight_requests);
  if (j.contains("consistency_mode")) {
    auto m = j.at("consistency_mode").get<std::string>();
    if (m == "consistency")
      cfg.consistency_mode = SelectionMode::consistency;
    else if (m == "random")
      cfg.consistency_mode = SelectionMode::random;
    else
      throw ConfigError("consistency_mode must be \"consistency\" or \"random\"");
  }
  read(j, "language_filter", cfg.language_filter);
  read(j, "sem_threshold", cfg.sem_threshold);
  read(j, "bootstrap_iterations", cfg.bootstrap_iterations);
  read(j, "max_tokens", cfg.max_tokens);
  read(j, "questions_per_paragraph", cfg.questions_per_paragraph);
  read(j, "seed_batch_cap", cfg.seed_batch_cap);
  if (j.contains("temperatures")) {
    const auto& t = j.at("temperatures");
    read(t, "paragraph", cfg.temperatures.paragraph);
    read(t, "questions", cfg.temperatures.questions);
    read(t, "answer", cfg.temperatures.answer);
    read(t, "critique", cfg.temperatures.critique);
  }
  if (j.contains("registry")) {
    const auto& r = j.at("registry");
    read(r, "regions", cfg.regions_path);
    read(r, "languages", cfg.languages_path);
    read(r, "region_aliases", cfg.region_aliases_path);
  }
  read(j, "templates_dir", cfg.templates_dir);
  read(j, "cache_dir", cfg.cache_dir);
  if (j.contains("backends")) read(j.at("backends"), "mode", cfg.backend_mode);

  if (cfg.n_samples < 2) throw ConfigError("n_samples must be >= 2");
  if (cfg.max_inflight_requests < 1)
    throw ConfigError("max_inflight_requests must be positive");
  if (!(cfg.sem_threshold > 0.0 && cfg.sem_threshold <= 1.0))
    throw ConfigError("sem_threshold must lie in (0, 1]");
  if (cfg.bootstrap_iterations < 1)
    throw ConfigError("bootstrap_iterations must be positive");
  if (cfg.questions_per_paragraph < 1)
    throw ConfigError("questions_per_paragraph must be positive");
  if (cfg.seed_batch_cap < 1) throw ConfigError("seed_batch_cap must be positive");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse failure in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["n_samples"] = cfg.n_samples;
  j["ratio"] = std::to_string(cfg.ratio_cultural_to_general.num) + ":" +
               std::to_string(cfg.ratio_cultural_to_general.den);
  j["seed"] = cfg.seed;
  j["max_inflight_requests"] = cfg.max_inflight_requests;
  j["consistency_mode"] = to_string(cfg.consistency_mode);
  j["language_filter"] = cfg.language_filter;
  j["sem_threshold"] = cfg.sem_threshold;
  j["bootstrap_iterations"] = cfg.bootstrap_iterations;
  j["max_tokens"] = cfg.max_tokens;
  j["questions_per_paragraph"] = cfg.questions_per_paragraph;
  j["seed_batch_cap"] = cfg.seed_batch_cap;
  j["temperatures"] = {{"paragraph", cfg.temperatures.paragraph},
                       {"questions", cfg.temperatures.questions},
                       {"answer", cfg.temperatures.answer},
                       {"critique", cfg.temperatures.critique}};
  j["registry"] = {{"regions", cfg.regions_path},
                   {"languages", cfg.languages_path},
                   {"region_aliases", cfg.region_aliases_path}};
  j["templates_dir"] = cfg.templates_dir;
  j["cache_dir"] = cfg.cache_dir;
  j["backends"] = {{"mode", cfg.backend_mode}};
  return j;
}

}  // namespace xlc::core
