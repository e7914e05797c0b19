#include "xlc/backends/mock.hpp"

#include <cmath>

#include "xlc/core/rng.hpp"

namespace xlc::backends {

using core::fnv1a64;
using core::Rng;

void MockStats::enter() {
  calls.fetch_add(1);
  int now = inflight.fetch_add(1) + 1;
  int seen = max_inflight.load();
  while (now > seen && !max_inflight.compare_exchange_weak(seen, now)) {
  }
}

void MockStats::leave() { inflight.fetch_sub(1); }

namespace {

struct StatsScope {
  explicit StatsScope(MockStats& s) : s_(s) { s_.enter(); }
  ~StatsScope() { s_.leave(); }
  MockStats& s_;
};

const std::string& last_user_text(const GenerationRequest& req) {
  for (auto it = req.messages.rbegin(); it != req.messages.rend(); ++it)
    if (it->role == Role::user) return it->text;
  throw BackendError("request has no user message");
}

}  // namespace

MockGeneratorConfig MockGeneratorConfig::from_json(const nlohmann::json& j) {
  MockGeneratorConfig cfg;
  if (j.contains("variants_by_tag"))
    for (auto& [k, v] : j.at("variants_by_tag").items())
      cfg.variants_by_tag[k] = v.get<int>();
  if (j.contains("default_variants"))
    cfg.default_variants = j.at("default_variants").get<int>();
  if (j.contains("question_rotation"))
    for (const auto& e : j.at("question_rotation"))
      cfg.question_rotation.emplace_back(e.at(0).get<std::string>(),
                                         e.at(1).get<std::string>());
  if (j.contains("questions_per_line_batch"))
    cfg.questions_per_line_batch = j.at("questions_per_line_batch").get<int>();
  return cfg;
}

int MockGenerator::variants_for(const std::string& tag) const {
  int best_len = -1, best = cfg_.default_variants;
  for (const auto& [prefix, k] : cfg_.variants_by_tag) {
    if (tag.rfind(prefix, 0) == 0 && static_cast<int>(prefix.size()) > best_len) {
      best_len = static_cast<int>(prefix.size());
      best = k;
    }
  }
  return best;
}

BackendResponse MockGenerator::generate(const GenerationRequest& req) {
  StatsScope scope(stats_);
  req.validate();
  const std::string& prompt = last_user_text(req);

  if (req.tag.rfind("paragraph", 0) == 0) {
    // Echo template: the paragraph carries the seed statements verbatim.
    return {prompt, 0.0, false};
  }

  if (req.tag.rfind("questions", 0) == 0) {
    if (cfg_.question_rotation.empty())
      throw BackendError("mock generator: question_rotation not configured");
    std::uint64_t h = fnv1a64(prompt);
    std::string out;
    for (int i = 0; i < cfg_.questions_per_line_batch; ++i) {
      const auto& [origin, lang] =
          cfg_.question_rotation[(h + i) % cfg_.question_rotation.size()];
      out += "What is a well-known tradition in " + origin + " (" +
             std::to_string((h + i) % 97) + ")? | " + origin + " | " + lang + "\n";
    }
    return {out, 0.0, false};
  }

  if (req.tag.rfind("critique", 0) == 0) {
    return {"Critique: " + prompt, 0.0, false};
  }

  int k = variants_for(req.tag);
  if (k <= 0) {
    // Unique per call: disperses the response cluster.
    return {"Answer [s" + std::to_string(req.seed) + "] to: " + prompt, 0.0, false};
  }
  std::uint64_t v = (fnv1a64(prompt) ^ req.seed * 0x9e3779b97f4a7c15ull) % k;
  return {"Answer variant " + std::to_string(v) + " to: " + prompt, 0.0, false};
}

MockEmbedderConfig MockEmbedderConfig::from_json(const nlohmann::json& j) {
  MockEmbedderConfig cfg;
  if (j.contains("dim")) cfg.dim = j.at("dim").get<std::size_t>();
  if (j.contains("collapse"))
    for (auto& [k, v] : j.at("collapse").items())
      cfg.collapse[k] = v.get<std::string>();
  return cfg;
}

std::vector<sim::EmbeddingVector> MockEmbedder::embed(
    std::span<const std::string> texts) {
  StatsScope scope(stats_);
  if (texts.empty()) throw BackendError("embed: empty batch");
  std::vector<sim::EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    if (text.empty()) throw BackendError("embed: empty text in batch");
    auto it = cfg_.collapse.find(text);
    const std::string& group = it != cfg_.collapse.end() ? it->second : text;
    Rng rng(fnv1a64(group));
    sim::EmbeddingVector v;
    v.values.resize(cfg_.dim);
    double norm_sq = 0.0;
    for (auto& x : v.values) {
      x = rng.gaussian();
      norm_sq += x * x;
    }
    double norm = std::sqrt(norm_sq);
    for (auto& x : v.values) x /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

MockTranslatorConfig MockTranslatorConfig::from_json(const nlohmann::json& j) {
  MockTranslatorConfig cfg;
  if (j.contains("supported"))
    for (const auto& p : j.at("supported"))
      cfg.supported.emplace(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  if (j.contains("dictionary"))
    for (const auto& e : j.at("dictionary"))
      cfg.dictionary[e.at("source").get<std::string>() + "\x1f" +
                     e.at("target").get<std::string>() + "\x1f" +
                     e.at("text").get<std::string>()] =
          e.at("translation").get<std::string>();
  return cfg;
}

MockTranslatorConfig MockTranslatorConfig::bidirectional_english(
    const std::vector<std::string>& codes) {
  MockTranslatorConfig cfg;
  for (const auto& c : codes) {
    if (c == "en") continue;
    cfg.supported.emplace("en", c);
    cfg.supported.emplace(c, "en");
  }
  return cfg;
}

bool MockTranslator::supports_pair(const core::LanguageCode& source,
                                   const core::LanguageCode& target) {
  if (source == target) return false;
  return cfg_.supported.count({source, target}) > 0;
}

std::string MockTranslator::translate(const std::string& text,
                                      const core::LanguageCode& source,
                                      const core::LanguageCode& target) {
  StatsScope scope(stats_);
  if (source == target) throw BackendError("translate: source equals target");
  if (!supports_pair(source, target))
    throw UnsupportedPair("translation pair not supported: " + source + "->" + target);
  auto it = cfg_.dictionary.find(source + "\x1f" + target + "\x1f" + text);
  if (it != cfg_.dictionary.end()) return it->second;
  return "[" + target + "] " + text;
}

}  // namespace xlc::backends
