#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xlc/backends/backend.hpp"
#include "xlc/core/registry.hpp"
#include "xlc/core/templates.hpp"
#include "xlc/core/types.hpp"

namespace xlc::qgen {

struct AssertionSeed {
  std::string id;
  std::string text;
  std::string source = "other";  // candle | cultureatlas | other
};

struct KnowledgeParagraph {
  std::string id;
  std::string text;
  std::vector<std::string> seed_ids;
};

struct RawQuestion {
  std::string text;
  std::string origin_raw;    // as extracted from model output
  std::string language_raw;
  std::string paragraph_id;
  std::optional<std::string> region;  // registry code after validation
  core::LanguageCode language;        // lowercased language_raw
};

struct StageDiagnostics {
  long parse_drops = 0;       // malformed question lines
  long origin_quarantined = 0;  // origin failed alias normalization
  long translation_skips = 0;
  long generation_failures = 0;
};

// One generation call collapsing a seed batch into a knowledge paragraph.
KnowledgeParagraph assertions_to_paragraph(const std::vector<AssertionSeed>& seeds,
                                           backends::GenerationBackend& gen,
                                           const core::TemplateSet& templates,
                                           const core::RunConfig& cfg);

// Parses the structured "question | origin | language" lines from one
// generation call. Malformed lines are dropped and counted, never fatal.
std::vector<RawQuestion> paragraph_to_questions(const KnowledgeParagraph& p,
                                                backends::GenerationBackend& gen,
                                                const core::TemplateSet& templates,
                                                const core::RunConfig& cfg,
                                                StageDiagnostics& diag);

// Line parser split out for direct testing.
std::vector<RawQuestion> parse_question_lines(const std::string& output,
                                              const std::string& paragraph_id,
                                              StageDiagnostics& diag);

// Drops English questions and unsupported translation pairs; with
// language_filter also drops languages outside the registry. Stable order.
std::vector<RawQuestion> filter_questions(std::vector<RawQuestion> qs,
                                          backends::TranslationBackend& translator,
                                          const core::Registry& registry,
                                          bool language_filter);

// Builds the bilingual pair: the question is generated in English and
// translated outward into the local language.
core::BilingualQuestionPair make_bilingual_pair(const RawQuestion& q,
                                                const std::string& pair_id,
                                                backends::TranslationBackend& translator);

struct QuestionStageResult {
  std::vector<core::BilingualQuestionPair> pairs;  // sorted by id
  StageDiagnostics diagnostics;
};

// Full stage: seeds -> paragraphs -> questions -> filter -> bilingual pairs.
QuestionStageResult run_question_stage(const std::vector<AssertionSeed>& seeds,
                                       const core::RunConfig& cfg,
                                       const core::Registry& registry,
                                       const core::TemplateSet& templates,
                                       backends::GenerationBackend& gen,
                                       backends::TranslationBackend& translator,
                                       long limit = -1);

}  // namespace xlc::qgen
