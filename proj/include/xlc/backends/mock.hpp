#pragma once

#include <atomic>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "xlc/backends/backend.hpp"

namespace xlc::backends {

// Instrumentation shared by the mock backends: tests read call counts to
// prove cache hits ("zero remote calls") and the in-flight high-water mark
// to prove bounded parallelism.
struct MockStats {
  std::atomic<long> calls{0};
  std::atomic<int> inflight{0};
  std::atomic<int> max_inflight{0};

  void enter();
  void leave();
};

struct MockGeneratorConfig {
  // Variant count per tag prefix; longest prefix wins. k >= 1 selects one of
  // k canned answers by seed (k = 1 gives full agreement); k = 0 makes every
  // call unique, which disperses the embedding cluster.
  std::map<std::string, int> variants_by_tag;
  int default_variants = 1;
  // (origin display name, language code) rotation for question generation.
  std::vector<std::pair<std::string, std::string>> question_rotation;
  int questions_per_line_batch = 3;

  static MockGeneratorConfig from_json(const nlohmann::json& j);
};

// Template-based deterministic generator: output is a pure function of
// (prompt, seed). Dispatches on the request tag so each pipeline stage gets
// a plausible shape of text.
class MockGenerator : public GenerationBackend {
 public:
  explicit MockGenerator(MockGeneratorConfig cfg = {}) : cfg_(std::move(cfg)) {}

  BackendResponse generate(const GenerationRequest& req) override;
  std::string identity() const override { return "mock-generator"; }

  MockStats& stats() { return stats_; }

 private:
  int variants_for(const std::string& tag) const;

  MockGeneratorConfig cfg_;
  MockStats stats_;
};

struct MockEmbedderConfig {
  std::size_t dim = 64;
  // Texts mapped to the same group share an embedding ("semantic collapse");
  // lets tests plant known cluster structure.
  std::map<std::string, std::string> collapse;

  static MockEmbedderConfig from_json(const nlohmann::json& j);
};

// Seeded pseudo-random unit vector per distinct text.
class MockEmbedder : public EmbeddingBackend {
 public:
  explicit MockEmbedder(MockEmbedderConfig cfg = {}) : cfg_(std::move(cfg)) {}

  std::vector<sim::EmbeddingVector> embed(std::span<const std::string> texts) override;
  std::string identity() const override { return "mock-embedder"; }

  MockStats& stats() { return stats_; }

 private:
  MockEmbedderConfig cfg_;
  MockStats stats_;
};

struct MockTranslatorConfig {
  std::set<std::pair<std::string, std::string>> supported;  // (source, target)
  // Exact phrase dictionary keyed by (source, target, text).
  std::map<std::string, std::string> dictionary;  // "src\x1ftgt\x1ftext" -> output

  static MockTranslatorConfig from_json(const nlohmann::json& j);
  // Support table covering en <-> every language in `codes`.
  static MockTranslatorConfig bidirectional_english(const std::vector<std::string>& codes);
};

// Dictionary translator with a generic marker fallback "[tgt] text".
class MockTranslator : public TranslationBackend {
 public:
  explicit MockTranslator(MockTranslatorConfig cfg = {}) : cfg_(std::move(cfg)) {}

  std::string translate(const std::string& text, const core::LanguageCode& source,
                        const core::LanguageCode& target) override;
  bool supports_pair(const core::LanguageCode& source,
                     const core::LanguageCode& target) override;
  std::string identity() const override { return "mock-translator"; }

  MockStats& stats() { return stats_; }

 private:
  MockTranslatorConfig cfg_;
  MockStats stats_;
};

}  // namespace xlc::backends
