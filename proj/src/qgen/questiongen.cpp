#include "xlc/qgen/questiongen.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "xlc/core/parallel.hpp"
#include "xlc/core/rng.hpp"

namespace xlc::qgen {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

void merge(StageDiagnostics& into, const StageDiagnostics& from) {
  into.parse_drops += from.parse_drops;
  into.origin_quarantined += from.origin_quarantined;
  into.translation_skips += from.translation_skips;
  into.generation_failures += from.generation_failures;
}

}  // namespace

KnowledgeParagraph assertions_to_paragraph(const std::vector<AssertionSeed>& seeds,
                                           backends::GenerationBackend& gen,
                                           const core::TemplateSet& templates,
                                           const core::RunConfig& cfg) {
  if (seeds.empty()) throw std::invalid_argument("assertions_to_paragraph: empty seed list");
  if (static_cast<int>(seeds.size()) > cfg.seed_batch_cap)
    throw std::invalid_argument("assertions_to_paragraph: seed batch exceeds cap");

  std::string joined;
  std::vector<std::string> ids;
  for (const auto& s : seeds) {
    if (s.text.empty()) throw std::invalid_argument("assertion seed has empty text");
    joined += "- " + s.text + "\n";
    ids.push_back(s.id);
  }

  backends::GenerationRequest req;
  req.messages = {{backends::Role::user,
                   core::TemplateSet::render(templates.get("paragraph"),
                                             {{"seeds", joined}})}};
  req.temperature = cfg.temperatures.paragraph;
  req.seed = core::child_seed(cfg.seed, "paragraph", seeds[0].id);
  req.max_tokens = cfg.max_tokens;
  req.tag = "paragraph";

  auto resp = gen.generate(req);
  if (resp.text.empty()) throw backends::BackendError("paragraph generation returned empty text");
  return {seeds[0].id + "-p", resp.text, std::move(ids)};
}

std::vector<RawQuestion> parse_question_lines(const std::string& output,
                                              const std::string& paragraph_id,
                                              StageDiagnostics& diag) {
  std::vector<RawQuestion> out;
  std::istringstream ss(output);
  std::string line;
  while (std::getline(ss, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      auto bar = line.find('|', start);
      if (bar == std::string::npos) {
        fields.push_back(trim(line.substr(start)));
        break;
      }
      fields.push_back(trim(line.substr(start, bar - start)));
      start = bar + 1;
    }
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty() || fields[0].back() != '?') {
      ++diag.parse_drops;
      continue;
    }
    RawQuestion q;
    q.text = fields[0];
    q.origin_raw = fields[1];
    q.language_raw = fields[2];
    q.language = lower(fields[2]);
    q.paragraph_id = paragraph_id;
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<RawQuestion> paragraph_to_questions(const KnowledgeParagraph& p,
                                                backends::GenerationBackend& gen,
                                                const core::TemplateSet& templates,
                                                const core::RunConfig& cfg,
                                                StageDiagnostics& diag) {
  if (p.text.empty()) throw std::invalid_argument("paragraph_to_questions: empty paragraph");

  backends::GenerationRequest req;
  req.messages = {{backends::Role::user,
                   core::TemplateSet::render(
                       templates.get("questions"),
                       {{"paragraph", p.text},
                        {"k", std::to_string(cfg.questions_per_paragraph)}})}};
  req.temperature = cfg.temperatures.questions;
  req.seed = core::child_seed(cfg.seed, "questions", p.id);
  req.max_tokens = cfg.max_tokens;
  req.tag = "questions";

  auto resp = gen.generate(req);
  return parse_question_lines(resp.text, p.id, diag);
}

std::vector<RawQuestion> filter_questions(std::vector<RawQuestion> qs,
                                          backends::TranslationBackend& translator,
                                          const core::Registry& registry,
                                          bool language_filter) {
  std::vector<RawQuestion> out;
  out.reserve(qs.size());
  for (auto& q : qs) {
    if (q.language == "en") continue;
    if (!translator.supports_pair("en", q.language)) continue;
    if (language_filter && !registry.has_language(q.language)) continue;
    out.push_back(std::move(q));
  }
  return out;
}

core::BilingualQuestionPair make_bilingual_pair(const RawQuestion& q,
                                                const std::string& pair_id,
                                                backends::TranslationBackend& translator) {
  if (q.language == "en")
    throw std::invalid_argument("make_bilingual_pair: question is English");
  core::BilingualQuestionPair pair;
  pair.id = pair_id;
  pair.english_text = q.text;
  pair.local_text = translator.translate(q.text, "en", q.language);
  pair.language = q.language;
  pair.region = q.region.value_or("unmapped");
  pair.source_id = q.paragraph_id;
  return pair;
}

QuestionStageResult run_question_stage(const std::vector<AssertionSeed>& seeds,
                                       const core::RunConfig& cfg,
                                       const core::Registry& registry,
                                       const core::TemplateSet& templates,
                                       backends::GenerationBackend& gen,
                                       backends::TranslationBackend& translator,
                                       long limit) {
  std::vector<AssertionSeed> work(seeds);
  if (limit >= 0 && static_cast<long>(work.size()) > limit)
    work.resize(static_cast<std::size_t>(limit));

  struct PerSeed {
    std::vector<core::BilingualQuestionPair> pairs;
    StageDiagnostics diag;
  };
  std::vector<PerSeed> results(work.size());

  core::parallel_for(work.size(), cfg.max_inflight_requests, [&](std::size_t i) {
    PerSeed& r = results[i];
    try {
      auto paragraph = assertions_to_paragraph({work[i]}, gen, templates, cfg);
      auto questions = paragraph_to_questions(paragraph, gen, templates, cfg, r.diag);
      questions = filter_questions(std::move(questions), translator, registry,
                                   cfg.language_filter);
      int idx = 0;
      for (auto& q : questions) {
        q.region = registry.normalize_origin(q.origin_raw);
        if (!q.region) {
          ++r.diag.origin_quarantined;
          ++idx;
          continue;
        }
        std::string pair_id = paragraph.id + "-q" + std::to_string(idx++);
        try {
          r.pairs.push_back(make_bilingual_pair(q, pair_id, translator));
        } catch (const backends::BackendError&) {
          ++r.diag.translation_skips;
        }
      }
    } catch (const backends::BackendError&) {
      ++r.diag.generation_failures;
    }
  });

  QuestionStageResult out;
  for (auto& r : results) {
    merge(out.diagnostics, r.diag);
    for (auto& p : r.pairs) out.pairs.push_back(std::move(p));
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace xlc::qgen
