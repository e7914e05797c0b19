#pragma once

#include <string>

#include "xlc/backends/backend.hpp"
#include "xlc/backends/retry.hpp"

namespace xlc::backends {

struct HttpEndpoint {
  std::string base_url;  // e.g. "http://host:8000"
  std::string path;
  std::string token;  // bearer auth, empty for none
  std::string model;
  int timeout_s = 120;
};

// Reads {URL_VAR} and {TOKEN_VAR} from the environment. Tokens live only in
// env vars, never in config files or caches.
HttpEndpoint endpoint_from_env(const char* url_var, const char* token_var,
                               const std::string& path, const std::string& model);

// Standard chat-completion JSON over HTTP:
//   POST {path} {"model", "messages":[{role,content}], "temperature",
//                "seed", "max_tokens"}
//   -> {"choices":[{"message":{"content": ...}}]}
class HttpChatGeneration : public GenerationBackend {
 public:
  HttpChatGeneration(HttpEndpoint ep, RetryPolicy retry = {})
      : ep_(std::move(ep)), retry_(retry) {}

  BackendResponse generate(const GenerationRequest& req) override;
  std::string identity() const override { return "http-chat:" + ep_.model; }

 private:
  HttpEndpoint ep_;
  RetryPolicy retry_;
};

// Embedding batch:
//   POST {path} {"model", "input":[texts]}
//   -> {"data":[{"embedding":[floats]}, ...]}  (order preserved)
class HttpEmbedding : public EmbeddingBackend {
 public:
  HttpEmbedding(HttpEndpoint ep, RetryPolicy retry = {})
      : ep_(std::move(ep)), retry_(retry) {}

  std::vector<sim::EmbeddingVector> embed(std::span<const std::string> texts) override;
  std::string identity() const override { return "http-embedding:" + ep_.model; }

 private:
  HttpEndpoint ep_;
  RetryPolicy retry_;
};

// Translation adapter. The default wire format is the LibreTranslate shape:
//   POST {path} {"q": text, "source", "target"} -> {"translatedText": ...}
// New providers implement TranslationBackend directly and drop in.
class HttpTranslation : public TranslationBackend {
 public:
  HttpTranslation(HttpEndpoint ep, RetryPolicy retry = {})
      : ep_(std::move(ep)), retry_(retry) {}

  std::string translate(const std::string& text, const core::LanguageCode& source,
                        const core::LanguageCode& target) override;
  bool supports_pair(const core::LanguageCode& source,
                     const core::LanguageCode& target) override;
  std::string identity() const override { return "http-translation"; }

 private:
  HttpEndpoint ep_;
  RetryPolicy retry_;
};

}  // namespace xlc::backends
