#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "xlc/backends/backend.hpp"

namespace xlc::backends {

// Content-addressed on-disk response cache: one file per entry, append-only.
// A corrupt entry is treated as a miss and never poisons its neighbors.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir);

  std::optional<std::string> get(const std::string& digest) const;
  void put(const std::string& digest, const std::string& payload);

 private:
  std::filesystem::path entry_path(const std::string& digest) const;

  std::filesystem::path dir_;
  mutable std::mutex write_mu_;
};

// Cache-through wrappers. Transparent: with a deterministic inner backend the
// returned text is identical with the cache on or off; only `cached` differs.

class CachingGeneration : public GenerationBackend {
 public:
  CachingGeneration(std::shared_ptr<GenerationBackend> inner,
                    std::shared_ptr<ResponseCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}

  BackendResponse generate(const GenerationRequest& req) override;
  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<GenerationBackend> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

class CachingEmbedding : public EmbeddingBackend {
 public:
  CachingEmbedding(std::shared_ptr<EmbeddingBackend> inner,
                   std::shared_ptr<ResponseCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}

  std::vector<sim::EmbeddingVector> embed(std::span<const std::string> texts) override;
  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<EmbeddingBackend> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

class CachingTranslation : public TranslationBackend {
 public:
  CachingTranslation(std::shared_ptr<TranslationBackend> inner,
                     std::shared_ptr<ResponseCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}

  std::string translate(const std::string& text, const core::LanguageCode& source,
                        const core::LanguageCode& target) override;
  bool supports_pair(const core::LanguageCode& source,
                     const core::LanguageCode& target) override {
    return inner_->supports_pair(source, target);
  }
  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<TranslationBackend> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

}  // namespace xlc::backends
