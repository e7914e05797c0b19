#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "xlc/core/types.hpp"

namespace xlc::cli {

// Options shared by the stage subcommands; flag overrides win over the
// config file, which wins over defaults.
struct Options {
  std::string config_path;  // empty: defaults only
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;  // "consistency" | "random"
  std::optional<bool> language_filter;
  std::optional<std::string> ratio;
  std::optional<double> tau;
  std::optional<int> bootstrap_iters;
  std::optional<std::string> cache_dir;
  bool mock = false;  // force mock backends
  long limit = -1;
  std::string data_dir = "data";
  std::string out_dir = "out";
};

struct LoadedConfig {
  core::RunConfig cfg;
  nlohmann::json backends_json;  // raw "backends" section for hub construction
};

LoadedConfig resolve_config(const Options& opts);

int cmd_questions(const Options& opts, const std::string& seeds_file,
                  const std::string& out_file);
int cmd_synthesize(const Options& opts, const std::string& pairs_file,
                   const std::string& out_file);
int cmd_build(const Options& opts, const std::string& instances_file,
              const std::string& general_file, const std::string& out_file);
int cmd_eval(const Options& opts, const std::string& predictions_file,
             const std::string& references_file,
             const std::string& baseline_predictions_file = "");

struct DemoSummary {
  long pairs = 0;
  long instances = 0;
  long quarantined = 0;
  long dataset_records = 0;
  long remote_calls = 0;
};

// Runs all four stages on the bundled mock fixtures. Deterministic: the same
// seed and a warm cache reproduce every output byte for byte with zero
// remote calls.
int cmd_demo(const Options& opts, DemoSummary* summary = nullptr);

}  // namespace xlc::cli
