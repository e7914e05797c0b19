#pragma once

#include <string>
#include <vector>

#include "xlc/backends/backend.hpp"
#include "xlc/core/registry.hpp"
#include "xlc/core/rng.hpp"
#include "xlc/core/templates.hpp"
#include "xlc/core/types.hpp"
#include "xlc/sim/similarity.hpp"

namespace xlc::pipeline {

// The N sampled answers for one (question, language), with embeddings in
// parallel index order.
struct ResponseSet {
  std::string pair_id;
  std::string language_tag;  // "en" or the local language code
  std::vector<std::string> responses;
  std::vector<sim::EmbeddingVector> embeddings;
};

struct GroundTruthSelection {
  std::string pair_id;
  sim::ConsistencyScore c_en;
  sim::ConsistencyScore c_local;
  std::string stronger;
  std::string weaker;
  std::size_t medoid = 0;  // index into the stronger set
  std::string g_star;      // selected ground truth (stronger language)
  std::string g_hat;       // g_star translated into the weaker language
  core::SelectionMode mode = core::SelectionMode::consistency;
};

struct TrainingInstance {
  std::string pair_id;
  std::string question_weak;
  std::string model_answer;
  std::string critique;
  std::string gold;
  std::string region;
  std::string weak_language;  // local code or "en"
  // Selection metadata carried into the output records.
  double c_en = 0.0;
  double c_local = 0.0;
  std::string stronger;
  std::size_t medoid = 0;
  core::SelectionMode mode = core::SelectionMode::consistency;
};

// N generation calls with child seeds (master, "sample", pair_id, lang, i),
// then one embedding batch.
ResponseSet sample_responses(const core::BilingualQuestionPair& pair,
                             const std::string& language_tag,
                             const core::RunConfig& cfg,
                             backends::GenerationBackend& gen,
                             backends::EmbeddingBackend& emb);

// Consistency mode: scores both languages, designates the stronger (tie ->
// local), takes its medoid as g*, translates stronger -> weaker. Random
// mode: stronger language and g* drawn uniformly, the rest identical.
GroundTruthSelection select_ground_truth(const ResponseSet& rs_en,
                                         const ResponseSet& rs_local,
                                         const core::RunConfig& cfg,
                                         const core::LanguageCode& local_language,
                                         backends::TranslationBackend& translator,
                                         core::Rng& rng);

// Uniformly random pick of the flawed model answer m from the weak set.
std::pair<std::size_t, std::string> pick_model_answer(const ResponseSet& rs_weak,
                                                      core::Rng& rng);

std::string generate_critique(const std::string& question, const std::string& model_answer,
                              const std::string& gold, backends::GenerationBackend& gen,
                              const core::TemplateSet& templates,
                              const core::RunConfig& cfg, const std::string& pair_id);

TrainingInstance assemble_instance(const core::BilingualQuestionPair& pair,
                                   const GroundTruthSelection& selection,
                                   const std::string& model_answer,
                                   const std::string& critique);

struct QuarantineEntry {
  std::string pair_id;
  std::string reason;
};

struct SynthesisResult {
  std::vector<TrainingInstance> instances;  // sorted by pair_id
  std::vector<QuarantineEntry> quarantined; // sorted by pair_id
};

// Per-pair processing is independent; failures quarantine the pair and the
// run continues. input count == emitted + quarantined.
SynthesisResult run_synthesis(const std::vector<core::BilingualQuestionPair>& pairs,
                              const core::RunConfig& cfg,
                              const core::TemplateSet& templates,
                              backends::GenerationBackend& gen,
                              backends::EmbeddingBackend& emb,
                              backends::TranslationBackend& translator);

}  // namespace xlc::pipeline
