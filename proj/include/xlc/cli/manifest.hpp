#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "xlc/core/types.hpp"

namespace xlc::cli {

// Append-only run manifest: one JSON line per completed stage, carrying the
// config snapshot, input/output file digests, counts, template versions, and
// backend identities.
class ManifestWriter {
 public:
  ManifestWriter(std::string path, std::string run_id)
      : path_(std::move(path)), run_id_(std::move(run_id)) {}

  void record_stage(const std::string& stage, const core::RunConfig& cfg,
                    const std::map<std::string, std::string>& input_files,
                    const std::map<std::string, std::string>& output_files,
                    const nlohmann::json& counts,
                    const std::map<std::string, std::string>& template_digests,
                    const nlohmann::json& backends,
                    const nlohmann::json& backend_calls);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::string run_id_;
};

// Digests every listed file that exists.
std::map<std::string, std::string> digest_files(const std::vector<std::string>& paths);

}  // namespace xlc::cli
