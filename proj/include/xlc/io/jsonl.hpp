#pragma once

#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace xlc::io {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads one JSON record per line, skipping blank lines.
std::vector<nlohmann::json> read_jsonl(const std::string& path);

// Writes one compact JSON record per line.
void write_jsonl(const std::string& path, const std::vector<nlohmann::json>& records);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace xlc::io
