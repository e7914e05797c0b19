#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xlc/core/types.hpp"
#include "xlc/sim/similarity.hpp"

namespace xlc::backends {

struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Transient rate-limit signal; carries the provider-supplied delay when known.
struct RateLimited : BackendError {
  explicit RateLimited(const std::string& msg, double retry_after_s = 0.0)
      : BackendError(msg), retry_after_s(retry_after_s) {}
  double retry_after_s;
};

// Translation pair the provider cannot handle. A filtering signal, not a
// crash: callers skip the item.
struct UnsupportedPair : BackendError {
  using BackendError::BackendError;
};

enum class Role { system, user, assistant };

std::string to_string(Role r);

struct ChatMessage {
  Role role;
  std::string text;
};

struct GenerationRequest {
  std::vector<ChatMessage> messages;
  double temperature = 0.7;
  std::uint64_t seed = 0;
  int max_tokens = 512;
  std::string tag;  // stage label, also partitions the cache

  // At least one user message; roles alternate after an optional leading
  // system message. Throws BackendError on violation.
  void validate() const;
};

struct BackendResponse {
  std::string text;
  double latency_ms = 0.0;
  bool cached = false;
};

// Canonical serialization of a request, field-order stable, used for cache
// keys and nothing else.
std::string canonical_serialization(const GenerationRequest& req);
std::string cache_key(const std::string& backend_kind, const std::string& canonical);

class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  virtual BackendResponse generate(const GenerationRequest& req) = 0;
  virtual std::string identity() const = 0;
};

class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  // One vector per text, uniform dimension, batch order preserved.
  virtual std::vector<sim::EmbeddingVector> embed(std::span<const std::string> texts) = 0;
  virtual std::string identity() const = 0;
};

class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string translate(const std::string& text,
                                const core::LanguageCode& source,
                                const core::LanguageCode& target) = 0;
  virtual bool supports_pair(const core::LanguageCode& source,
                             const core::LanguageCode& target) = 0;
  virtual std::string identity() const = 0;
};

}  // namespace xlc::backends
