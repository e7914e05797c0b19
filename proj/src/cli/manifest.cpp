#include "xlc/cli/manifest.hpp"

#include <filesystem>
#include <fstream>

#include "xlc/core/config.hpp"
#include "xlc/io/digest.hpp"

namespace xlc::cli {

void ManifestWriter::record_stage(
    const std::string& stage, const core::RunConfig& cfg,
    const std::map<std::string, std::string>& input_files,
    const std::map<std::string, std::string>& output_files,
    const nlohmann::json& counts,
    const std::map<std::string, std::string>& template_digests,
    const nlohmann::json& backends, const nlohmann::json& backend_calls) {
  nlohmann::json entry;
  entry["run_id"] = run_id_;
  entry["stage"] = stage;
  entry["config"] = core::config_to_json(cfg);
  entry["inputs"] = input_files;
  entry["outputs"] = output_files;
  entry["counts"] = counts;
  entry["templates"] = template_digests;
  entry["backends"] = backends;
  entry["backend_calls"] = backend_calls;

  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot append to manifest: " + path_);
  out << entry.dump() << "\n";
}

std::map<std::string, std::string> digest_files(const std::vector<std::string>& paths) {
  std::map<std::string, std::string> out;
  for (const auto& p : paths)
    if (std::filesystem::exists(p)) out[p] = io::file_digest(p);
  return out;
}

}  // namespace xlc::cli
