#pragma once

#include <map>
#include <string>

namespace xlc::core {

// Prompt templates loaded from plain-text files with {name} placeholders.
// Localized variants live next to the base file as <name>.<lang>.txt and win
// when present; missing localizations fall back to the base (English) text.
class TemplateSet {
 public:
  static TemplateSet load(const std::string& dir);

  const std::string& get(const std::string& name) const;
  // Localized lookup with English fallback.
  const std::string& get_localized(const std::string& name,
                                   const std::string& lang) const;

  static std::string render(const std::string& tmpl,
                            const std::map<std::string, std::string>& vars);

  // name -> sha256 of file contents, recorded in run manifests.
  const std::map<std::string, std::string>& digests() const { return digests_; }

 private:
  std::map<std::string, std::string> templates_;  // "name" or "name.lang"
  std::map<std::string, std::string> digests_;
};

}  // namespace xlc::core
