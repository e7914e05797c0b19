#include "xlc/backends/backend.hpp"

#include <json.hpp>

#include "xlc/io/digest.hpp"

namespace xlc::backends {

std::string to_string(Role r) {
  switch (r) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "user";
}

void GenerationRequest::validate() const {
  bool has_user = false;
  std::size_t i = 0;
  if (!messages.empty() && messages[0].role == Role::system) i = 1;
  Role expected = Role::user;
  for (; i < messages.size(); ++i) {
    if (messages[i].role == Role::system)
      throw BackendError("system message only allowed in leading position");
    if (messages[i].role != expected)
      throw BackendError("conversation roles must alternate user/assistant");
    if (messages[i].role == Role::user) has_user = true;
    expected = expected == Role::user ? Role::assistant : Role::user;
  }
  if (!has_user) throw BackendError("request needs at least one user message");
}

std::string canonical_serialization(const GenerationRequest& req) {
  nlohmann::json j;
  j["max_tokens"] = req.max_tokens;
  nlohmann::json msgs = nlohmann::json::array();
  for (const auto& m : req.messages)
    msgs.push_back({{"role", to_string(m.role)}, {"text", m.text}});
  j["messages"] = msgs;
  j["seed"] = req.seed;
  j["tag"] = req.tag;
  j["temperature"] = req.temperature;
  return j.dump();
}

std::string cache_key(const std::string& backend_kind, const std::string& canonical) {
  return io::sha256_hex(backend_kind + "\x1f" + canonical);
}

}  // namespace xlc::backends
