#include "xlc/backends/hub.hpp"

#include "xlc/backends/http.hpp"

namespace xlc::backends {

RemoteCallCounts BackendHub::mock_calls() const {
  RemoteCallCounts c;
  if (mock_generator) c.generation = mock_generator->stats().calls.load();
  if (mock_embedder) c.embedding = mock_embedder->stats().calls.load();
  if (mock_translator) c.translation = mock_translator->stats().calls.load();
  return c;
}

BackendHub BackendHub::build(const core::RunConfig& cfg,
                             const core::Registry& registry,
                             const nlohmann::json& backend_config) {
  BackendHub hub;
  hub.limiter = std::make_shared<ParallelismLimiter>(cfg.max_inflight_requests);

  std::shared_ptr<GenerationBackend> gen;
  std::shared_ptr<EmbeddingBackend> emb;
  std::shared_ptr<TranslationBackend> tr;

  if (cfg.backend_mode == "mock") {
    nlohmann::json mock_cfg = backend_config.value("mock", nlohmann::json::object());

    auto gen_cfg = MockGeneratorConfig::from_json(
        mock_cfg.value("generator", nlohmann::json::object()));
    if (gen_cfg.question_rotation.empty()) {
      // Default rotation: every non-English region in the registry.
      for (const auto& r : registry.regions())
        if (r.language != "en")
          gen_cfg.question_rotation.emplace_back(r.display_name, r.language);
    }
    hub.mock_generator = std::make_shared<MockGenerator>(std::move(gen_cfg));
    gen = hub.mock_generator;

    hub.mock_embedder = std::make_shared<MockEmbedder>(MockEmbedderConfig::from_json(
        mock_cfg.value("embedder", nlohmann::json::object())));
    emb = hub.mock_embedder;

    MockTranslatorConfig tr_cfg;
    if (mock_cfg.contains("translator")) {
      tr_cfg = MockTranslatorConfig::from_json(mock_cfg.at("translator"));
    } else {
      std::vector<std::string> codes;
      for (const auto& l : registry.languages()) codes.push_back(l.code);
      tr_cfg = MockTranslatorConfig::bidirectional_english(codes);
    }
    hub.mock_translator = std::make_shared<MockTranslator>(std::move(tr_cfg));
    tr = hub.mock_translator;
  } else if (cfg.backend_mode == "http") {
    nlohmann::json http_cfg = backend_config.value("http", nlohmann::json::object());
    gen = std::make_shared<HttpChatGeneration>(endpoint_from_env(
        "XLC_GEN_URL", "XLC_GEN_TOKEN",
        http_cfg.value("generation_path", "/v1/chat/completions"),
        http_cfg.value("generation_model", "")));
    emb = std::make_shared<HttpEmbedding>(
        endpoint_from_env("XLC_EMB_URL", "XLC_EMB_TOKEN",
                          http_cfg.value("embedding_path", "/v1/embeddings"),
                          http_cfg.value("embedding_model", "")));
    tr = std::make_shared<HttpTranslation>(
        endpoint_from_env("XLC_TRANSLATE_URL", "XLC_TRANSLATE_TOKEN",
                          http_cfg.value("translation_path", "/translate"), ""));
  } else {
    throw core::ConfigError("unknown backend mode: " + cfg.backend_mode);
  }

  gen = std::make_shared<LimitedGeneration>(std::move(gen), hub.limiter);
  emb = std::make_shared<LimitedEmbedding>(std::move(emb), hub.limiter);
  tr = std::make_shared<LimitedTranslation>(std::move(tr), hub.limiter);

  if (!cfg.cache_dir.empty()) {
    auto cache = std::make_shared<ResponseCache>(cfg.cache_dir);
    gen = std::make_shared<CachingGeneration>(std::move(gen), cache);
    emb = std::make_shared<CachingEmbedding>(std::move(emb), cache);
    tr = std::make_shared<CachingTranslation>(std::move(tr), cache);
  }

  hub.generation = std::move(gen);
  hub.embedding = std::move(emb);
  hub.translation = std::move(tr);
  return hub;
}

}  // namespace xlc::backends
