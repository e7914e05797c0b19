#pragma once

#include <string>

namespace xlc::io {

// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

// Hex-encoded SHA-256 of a file's contents. Throws on open failure.
std::string file_digest(const std::string& path);

}  // namespace xlc::io
