#include "xlc/backends/http.hpp"

#include <chrono>
#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

#include "xlc/core/rng.hpp"

namespace xlc::backends {

using nlohmann::json;

HttpEndpoint endpoint_from_env(const char* url_var, const char* token_var,
                               const std::string& path, const std::string& model) {
  HttpEndpoint ep;
  const char* url = std::getenv(url_var);
  if (!url || !*url)
    throw BackendError(std::string("environment variable not set: ") + url_var);
  ep.base_url = url;
  if (const char* tok = std::getenv(token_var)) ep.token = tok;
  ep.path = path;
  ep.model = model;
  return ep;
}

namespace {

json post_json(const HttpEndpoint& ep, const json& body) {
  httplib::Client client(ep.base_url);
  client.set_read_timeout(ep.timeout_s, 0);
  client.set_connection_timeout(10, 0);
  httplib::Headers headers;
  if (!ep.token.empty()) headers.emplace("Authorization", "Bearer " + ep.token);
  auto res = client.Post(ep.path, headers, body.dump(), "application/json");
  if (!res)
    throw BackendError("request failed: " + httplib::to_string(res.error()));
  if (res->status == 429) {
    double retry_after = 0.0;
    if (res->has_header("Retry-After"))
      retry_after = std::atof(res->get_header_value("Retry-After").c_str());
    throw RateLimited("rate limited by " + ep.base_url, retry_after);
  }
  if (res->status < 200 || res->status >= 300)
    throw BackendError("HTTP " + std::to_string(res->status) + " from " +
                       ep.base_url + ep.path);
  try {
    return json::parse(res->body);
  } catch (const json::parse_error& e) {
    throw BackendError(std::string("malformed remote payload: ") + e.what());
  }
}

}  // namespace

BackendResponse HttpChatGeneration::generate(const GenerationRequest& req) {
  req.validate();
  json body;
  body["model"] = ep_.model;
  body["temperature"] = req.temperature;
  body["seed"] = req.seed;
  body["max_tokens"] = req.max_tokens;
  auto msgs = json::array();
  for (const auto& m : req.messages)
    msgs.push_back({{"role", to_string(m.role)}, {"content", m.text}});
  body["messages"] = msgs;

  auto t0 = std::chrono::steady_clock::now();
  json resp = with_retries(retry_, req.seed, [&] { return post_json(ep_, body); });
  auto dt = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  try {
    std::string text = resp.at("choices").at(0).at("message").at("content");
    if (text.empty()) throw BackendError("empty completion text");
    return {text, dt, false};
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed completion payload: ") + e.what());
  }
}

std::vector<sim::EmbeddingVector> HttpEmbedding::embed(
    std::span<const std::string> texts) {
  if (texts.empty()) throw BackendError("embed: empty batch");
  json body;
  body["model"] = ep_.model;
  body["input"] = std::vector<std::string>(texts.begin(), texts.end());
  json resp = with_retries(retry_, core::fnv1a64(texts[0]),
                           [&] { return post_json(ep_, body); });
  std::vector<sim::EmbeddingVector> out;
  try {
    for (const auto& row : resp.at("data"))
      out.push_back({row.at("embedding").get<std::vector<double>>()});
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed embedding payload: ") + e.what());
  }
  if (out.size() != texts.size())
    throw BackendError("embedding batch size mismatch");
  for (const auto& v : out)
    if (v.dim() != out[0].dim())
      throw BackendError("embedding dimension drift within batch");
  return out;
}

std::string HttpTranslation::translate(const std::string& text,
                                       const core::LanguageCode& source,
                                       const core::LanguageCode& target) {
  if (source == target) throw BackendError("translate: source equals target");
  json body{{"q", text}, {"source", source}, {"target", target}};
  json resp = with_retries(retry_, core::fnv1a64(text),
                           [&] { return post_json(ep_, body); });
  try {
    return resp.at("translatedText").get<std::string>();
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed translation payload: ") + e.what());
  }
}

bool HttpTranslation::supports_pair(const core::LanguageCode& source,
                                    const core::LanguageCode& target) {
  if (source == target) return false;
  // Probe with a trivial request; unsupported pairs surface as errors.
  try {
    translate("hello", source, target);
    return true;
  } catch (const BackendError&) {
    return false;
  }
}

}  // namespace xlc::backends
