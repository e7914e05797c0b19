#include "xlc/core/templates.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xlc/core/types.hpp"
#include "xlc/io/digest.hpp"

namespace xlc::core {

namespace fs = std::filesystem;

TemplateSet TemplateSet::load(const std::string& dir) {
  TemplateSet ts;
  if (!fs::is_directory(dir))
    throw ConfigError("template directory not found: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    // Trim one trailing newline so templates splice cleanly into prompts.
    if (!text.empty() && text.back() == '\n') text.pop_back();
    std::string key = entry.path().stem().string();  // "critique_request.zh"
    ts.templates_[key] = text;
    ts.digests_[key] = io::sha256_hex(text);
  }
  return ts;
}

const std::string& TemplateSet::get(const std::string& name) const {
  auto it = templates_.find(name);
  if (it == templates_.end())
    throw ConfigError("missing prompt template: " + name);
  return it->second;
}

const std::string& TemplateSet::get_localized(const std::string& name,
                                              const std::string& lang) const {
  auto it = templates_.find(name + "." + lang);
  if (it != templates_.end()) return it->second;
  return get(name);
}

std::string TemplateSet::render(const std::string& tmpl,
                                const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      auto close = tmpl.find('}', i);
      if (close != std::string::npos) {
        auto it = vars.find(tmpl.substr(i + 1, close - i - 1));
        if (it != vars.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

}  // namespace xlc::core
