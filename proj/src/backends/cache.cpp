#include "xlc/backends/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xlc/io/digest.hpp"

namespace xlc::backends {

namespace fs = std::filesystem;

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

fs::path ResponseCache::entry_path(const std::string& digest) const {
  return dir_ / (digest + ".json");
}

std::optional<std::string> ResponseCache::get(const std::string& digest) const {
  std::ifstream in(entry_path(digest), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    auto j = nlohmann::json::parse(ss.str());
    return j.at("payload").get<std::string>();
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entry == miss
  }
}

void ResponseCache::put(const std::string& digest, const std::string& payload) {
  nlohmann::json j{{"payload", payload}};
  std::lock_guard lk(write_mu_);
  auto tmp = entry_path(digest);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump();
  }
  fs::rename(tmp, entry_path(digest));
}

BackendResponse CachingGeneration::generate(const GenerationRequest& req) {
  const auto key = cache_key("generation", canonical_serialization(req));
  if (auto hit = cache_->get(key))
    return {*hit, 0.0, true};
  auto resp = inner_->generate(req);
  cache_->put(key, resp.text);
  return resp;
}

std::vector<sim::EmbeddingVector> CachingEmbedding::embed(
    std::span<const std::string> texts) {
  std::vector<sim::EmbeddingVector> out(texts.size());
  std::vector<std::string> misses;
  std::vector<std::size_t> miss_pos;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const auto key = cache_key("embedding", texts[i]);
    if (auto hit = cache_->get(key)) {
      auto j = nlohmann::json::parse(*hit);
      out[i].values = j.get<std::vector<double>>();
    } else {
      misses.push_back(texts[i]);
      miss_pos.push_back(i);
    }
  }
  if (!misses.empty()) {
    auto fresh = inner_->embed(misses);
    for (std::size_t k = 0; k < misses.size(); ++k) {
      out[miss_pos[k]] = fresh[k];
      cache_->put(cache_key("embedding", misses[k]),
                  nlohmann::json(fresh[k].values).dump());
    }
  }
  return out;
}

std::string CachingTranslation::translate(const std::string& text,
                                          const core::LanguageCode& source,
                                          const core::LanguageCode& target) {
  const auto key =
      cache_key("translation", source + "\x1f" + target + "\x1f" + text);
  if (auto hit = cache_->get(key)) return *hit;
  auto result = inner_->translate(text, source, target);
  cache_->put(key, result);
  return result;
}

}  // namespace xlc::backends
