#pragma once

#include <memory>

#include <json.hpp>

#include "xlc/backends/backend.hpp"
#include "xlc/backends/cache.hpp"
#include "xlc/backends/limiter.hpp"
#include "xlc/backends/mock.hpp"
#include "xlc/core/registry.hpp"
#include "xlc/core/types.hpp"

namespace xlc::backends {

// Wrappers that hold a limiter ticket for the duration of the remote call.
// They sit between the cache layer and the raw backend, so cache hits never
// spend a slot.

class LimitedGeneration : public GenerationBackend {
 public:
  LimitedGeneration(std::shared_ptr<GenerationBackend> inner,
                    std::shared_ptr<ParallelismLimiter> limiter)
      : inner_(std::move(inner)), limiter_(std::move(limiter)) {}
  BackendResponse generate(const GenerationRequest& req) override {
    ParallelismLimiter::Ticket t(*limiter_);
    return inner_->generate(req);
  }
  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<GenerationBackend> inner_;
  std::shared_ptr<ParallelismLimiter> limiter_;
};

class LimitedEmbedding : public EmbeddingBackend {
 public:
  LimitedEmbedding(std::shared_ptr<EmbeddingBackend> inner,
                   std::shared_ptr<ParallelismLimiter> limiter)
      : inner_(std::move(inner)), limiter_(std::move(limiter)) {}
  std::vector<sim::EmbeddingVector> embed(std::span<const std::string> texts) override {
    ParallelismLimiter::Ticket t(*limiter_);
    return inner_->embed(texts);
  }
  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<EmbeddingBackend> inner_;
  std::shared_ptr<ParallelismLimiter> limiter_;
};

class LimitedTranslation : public TranslationBackend {
 public:
  LimitedTranslation(std::shared_ptr<TranslationBackend> inner,
                     std::shared_ptr<ParallelismLimiter> limiter)
      : inner_(std::move(inner)), limiter_(std::move(limiter)) {}
  std::string translate(const std::string& text, const core::LanguageCode& source,
                        const core::LanguageCode& target) override {
    ParallelismLimiter::Ticket t(*limiter_);
    return inner_->translate(text, source, target);
  }
  bool supports_pair(const core::LanguageCode& source,
                     const core::LanguageCode& target) override {
    return inner_->supports_pair(source, target);
  }
  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<TranslationBackend> inner_;
  std::shared_ptr<ParallelismLimiter> limiter_;
};

struct RemoteCallCounts {
  long generation = 0;
  long embedding = 0;
  long translation = 0;
  long total() const { return generation + embedding + translation; }
};

// Wires the three backend capabilities with bounded parallelism and the
// on-disk cache, from either the mock or http configuration.
struct BackendHub {
  std::shared_ptr<GenerationBackend> generation;
  std::shared_ptr<EmbeddingBackend> embedding;
  std::shared_ptr<TranslationBackend> translation;
  std::shared_ptr<ParallelismLimiter> limiter;

  // Raw mocks for instrumentation; null in http mode.
  std::shared_ptr<MockGenerator> mock_generator;
  std::shared_ptr<MockEmbedder> mock_embedder;
  std::shared_ptr<MockTranslator> mock_translator;

  // Remote (uncached) call counts; zero for http backends where the counter
  // lives with the provider.
  RemoteCallCounts mock_calls() const;

  static BackendHub build(const core::RunConfig& cfg, const core::Registry& registry,
                          const nlohmann::json& backend_config);
};

}  // namespace xlc::backends
