#include "xlc/pipeline/pipeline.hpp"

#include <algorithm>
#include <optional>

#include "xlc/core/parallel.hpp"

namespace xlc::pipeline {

using backends::GenerationRequest;
using backends::Role;

ResponseSet sample_responses(const core::BilingualQuestionPair& pair,
                             const std::string& language_tag,
                             const core::RunConfig& cfg,
                             backends::GenerationBackend& gen,
                             backends::EmbeddingBackend& emb) {
  const bool is_en = language_tag == "en";
  const std::string& question = is_en ? pair.english_text : pair.local_text;

  ResponseSet rs;
  rs.pair_id = pair.id;
  rs.language_tag = language_tag;
  rs.responses.reserve(cfg.n_samples);
  for (int i = 0; i < cfg.n_samples; ++i) {
    GenerationRequest req;
    req.messages = {
        {Role::system, "Answer concisely in the language of the question."},
        {Role::user, question}};
    req.temperature = cfg.temperatures.answer;
    req.seed = core::child_seed(cfg.seed, "sample",
                                pair.id + "\x1f" + language_tag + "\x1f" +
                                    std::to_string(i));
    req.max_tokens = cfg.max_tokens;
    req.tag = "answer." + std::string(is_en ? "en" : "local");
    rs.responses.push_back(gen.generate(req).text);
  }
  rs.embeddings = emb.embed(rs.responses);
  return rs;
}

GroundTruthSelection select_ground_truth(const ResponseSet& rs_en,
                                         const ResponseSet& rs_local,
                                         const core::RunConfig& cfg,
                                         const core::LanguageCode& local_language,
                                         backends::TranslationBackend& translator,
                                         core::Rng& rng) {
  if (rs_en.pair_id != rs_local.pair_id)
    throw std::invalid_argument("select_ground_truth: response sets from different pairs");

  GroundTruthSelection sel;
  sel.pair_id = rs_en.pair_id;
  sel.mode = cfg.consistency_mode;
  sel.c_en = sim::consistency_score(rs_en.embeddings);
  sel.c_local = sim::consistency_score(rs_local.embeddings);

  const ResponseSet* stronger_set = nullptr;
  if (cfg.consistency_mode == core::SelectionMode::consistency) {
    auto d = sim::designate_stronger(sel.c_en, sel.c_local, "en", "local");
    sel.stronger = d.stronger;
    sel.weaker = d.weaker;
    stronger_set = sel.stronger == "en" ? &rs_en : &rs_local;
    sel.medoid = sim::medoid_index(stronger_set->embeddings);
  } else {
    sel.stronger = rng.uniform_index(2) == 0 ? "en" : "local";
    sel.weaker = sel.stronger == "en" ? "local" : "en";
    stronger_set = sel.stronger == "en" ? &rs_en : &rs_local;
    sel.medoid = rng.uniform_index(stronger_set->responses.size());
  }
  sel.g_star = stronger_set->responses[sel.medoid];

  // Translation always runs stronger -> weaker, in either direction.
  const std::string from = sel.stronger == "en" ? "en" : local_language;
  const std::string to = sel.weaker == "en" ? "en" : local_language;
  sel.g_hat = translator.translate(sel.g_star, from, to);
  return sel;
}

std::pair<std::size_t, std::string> pick_model_answer(const ResponseSet& rs_weak,
                                                      core::Rng& rng) {
  if (rs_weak.responses.empty())
    throw std::invalid_argument("pick_model_answer: empty response set");
  std::size_t idx = rng.uniform_index(rs_weak.responses.size());
  return {idx, rs_weak.responses[idx]};
}

std::string generate_critique(const std::string& question, const std::string& model_answer,
                              const std::string& gold, backends::GenerationBackend& gen,
                              const core::TemplateSet& templates,
                              const core::RunConfig& cfg, const std::string& pair_id) {
  if (question.empty() || model_answer.empty() || gold.empty())
    throw std::invalid_argument("generate_critique: empty input");
  GenerationRequest req;
  req.messages = {{Role::user, core::TemplateSet::render(
                                   templates.get("critique"),
                                   {{"question", question},
                                    {"answer", model_answer},
                                    {"reference", gold}})}};
  req.temperature = cfg.temperatures.critique;
  req.seed = core::child_seed(cfg.seed, "critique", pair_id);
  req.max_tokens = cfg.max_tokens;
  req.tag = "critique";
  return gen.generate(req).text;
}

TrainingInstance assemble_instance(const core::BilingualQuestionPair& pair,
                                   const GroundTruthSelection& selection,
                                   const std::string& model_answer,
                                   const std::string& critique) {
  if (selection.pair_id != pair.id)
    throw std::invalid_argument("assemble_instance: selection belongs to another pair");
  if (critique.empty())
    throw std::invalid_argument("assemble_instance: empty critique");

  TrainingInstance inst;
  inst.pair_id = pair.id;
  inst.question_weak =
      selection.weaker == "en" ? pair.english_text : pair.local_text;
  inst.model_answer = model_answer;
  inst.critique = critique;
  inst.gold = selection.g_hat;
  inst.region = pair.region;
  inst.weak_language = selection.weaker == "en" ? "en" : pair.language;
  inst.c_en = selection.c_en.value;
  inst.c_local = selection.c_local.value;
  inst.stronger = selection.stronger;
  inst.medoid = selection.medoid;
  inst.mode = selection.mode;
  return inst;
}

SynthesisResult run_synthesis(const std::vector<core::BilingualQuestionPair>& pairs,
                              const core::RunConfig& cfg,
                              const core::TemplateSet& templates,
                              backends::GenerationBackend& gen,
                              backends::EmbeddingBackend& emb,
                              backends::TranslationBackend& translator) {
  struct Slot {
    std::optional<TrainingInstance> instance;
    std::optional<QuarantineEntry> quarantine;
  };
  std::vector<Slot> slots(pairs.size());

  core::parallel_for(pairs.size(), cfg.max_inflight_requests, [&](std::size_t i) {
    const auto& pair = pairs[i];
    try {
      auto rs_en = sample_responses(pair, "en", cfg, gen, emb);
      auto rs_local = sample_responses(pair, pair.language, cfg, gen, emb);

      core::Rng select_rng(core::child_seed(cfg.seed, "select", pair.id));
      auto sel = select_ground_truth(rs_en, rs_local, cfg, pair.language,
                                     translator, select_rng);

      const ResponseSet& rs_weak = sel.weaker == "en" ? rs_en : rs_local;
      core::Rng pick_rng(core::child_seed(cfg.seed, "pick", pair.id));
      auto [idx, m] = pick_model_answer(rs_weak, pick_rng);
      (void)idx;

      auto critique = generate_critique(
          sel.weaker == "en" ? pair.english_text : pair.local_text, m, sel.g_hat,
          gen, templates, cfg, pair.id);
      slots[i].instance = assemble_instance(pair, sel, m, critique);
    } catch (const std::exception& e) {
      slots[i].quarantine = QuarantineEntry{pair.id, e.what()};
    }
  });

  SynthesisResult out;
  for (auto& s : slots) {
    if (s.instance) out.instances.push_back(std::move(*s.instance));
    if (s.quarantine) out.quarantined.push_back(std::move(*s.quarantine));
  }
  std::sort(out.instances.begin(), out.instances.end(),
            [](const auto& a, const auto& b) { return a.pair_id < b.pair_id; });
  std::sort(out.quarantined.begin(), out.quarantined.end(),
            [](const auto& a, const auto& b) { return a.pair_id < b.pair_id; });
  return out;
}

}  // namespace xlc::pipeline
