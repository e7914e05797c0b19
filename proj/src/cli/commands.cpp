#include "xlc/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "xlc/backends/hub.hpp"
#include "xlc/cli/manifest.hpp"
#include "xlc/core/config.hpp"
#include "xlc/core/registry.hpp"
#include "xlc/core/templates.hpp"
#include "xlc/dataset/dataset.hpp"
#include "xlc/eval/eval.hpp"
#include "xlc/io/digest.hpp"
#include "xlc/io/formats.hpp"
#include "xlc/io/jsonl.hpp"
#include "xlc/pipeline/pipeline.hpp"
#include "xlc/qgen/questiongen.hpp"

namespace xlc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

LoadedConfig resolve_config(const Options& opts) {
  LoadedConfig lc;
  json raw = json::object();
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) throw core::ConfigError("cannot open config file: " + opts.config_path);
    in >> raw;
  }
  lc.cfg = core::config_from_json(raw);
  lc.backends_json = raw.value("backends", json::object());

  if (opts.config_path.empty()) {
    lc.cfg.regions_path = opts.data_dir + "/regions.tsv";
    lc.cfg.languages_path = opts.data_dir + "/languages.tsv";
    lc.cfg.region_aliases_path = opts.data_dir + "/region_aliases.tsv";
    lc.cfg.templates_dir = opts.data_dir + "/templates";
  }

  if (opts.seed) lc.cfg.seed = *opts.seed;
  if (opts.mode) {
    if (*opts.mode == "consistency")
      lc.cfg.consistency_mode = core::SelectionMode::consistency;
    else if (*opts.mode == "random")
      lc.cfg.consistency_mode = core::SelectionMode::random;
    else
      throw core::ConfigError("--mode must be consistency or random");
  }
  if (opts.language_filter) lc.cfg.language_filter = *opts.language_filter;
  if (opts.ratio) lc.cfg.ratio_cultural_to_general = core::parse_ratio(*opts.ratio);
  if (opts.tau) {
    if (!(*opts.tau > 0.0 && *opts.tau <= 1.0))
      throw core::ConfigError("--tau must lie in (0, 1]");
    lc.cfg.sem_threshold = *opts.tau;
  }
  if (opts.bootstrap_iters) lc.cfg.bootstrap_iterations = *opts.bootstrap_iters;
  if (opts.cache_dir) lc.cfg.cache_dir = *opts.cache_dir;
  if (opts.mock) lc.cfg.backend_mode = "mock";
  return lc;
}

namespace {

struct StageContext {
  core::RunConfig cfg;
  json backends_json;
  core::Registry registry;
  core::TemplateSet templates;
  backends::BackendHub hub;
  ManifestWriter manifest;
};

StageContext make_context(const Options& opts) {
  auto lc = resolve_config(opts);
  fs::create_directories(opts.out_dir);
  auto registry = core::Registry::load(lc.cfg.regions_path, lc.cfg.languages_path,
                                       lc.cfg.region_aliases_path);
  auto templates = core::TemplateSet::load(lc.cfg.templates_dir);
  auto hub = backends::BackendHub::build(lc.cfg, registry, lc.backends_json);
  std::string run_id = "run-" + std::to_string(lc.cfg.seed);
  ManifestWriter manifest(opts.out_dir + "/manifest.jsonl", run_id);
  return {std::move(lc.cfg), std::move(lc.backends_json), std::move(registry),
          std::move(templates), std::move(hub), std::move(manifest)};
}

json backend_identities(const backends::BackendHub& hub) {
  return {{"generation", hub.generation->identity()},
          {"embedding", hub.embedding->identity()},
          {"translation", hub.translation->identity()}};
}

json call_counts(const backends::BackendHub& hub) {
  auto c = hub.mock_calls();
  return {{"generation", c.generation},
          {"embedding", c.embedding},
          {"translation", c.translation}};
}

int eval_with_context(StageContext& ctx, const Options& opts,
                      const std::string& predictions_file,
                      const std::string& references_file,
                      const std::string& baseline_predictions_file) {
  const double tau = ctx.cfg.sem_threshold;
  auto items = io::read_eval_items(predictions_file, references_file);
  auto scores = eval::region_scores(items, *ctx.hub.embedding, tau);

  json report;
  report["metric"] = "sem-threshold-max-cosine";
  report["tau"] = tau;
  report["embedder"] = ctx.hub.embedding->identity();
  std::ostringstream text;
  text << "metric=sem-threshold-max-cosine tau=" << tau
       << " embedder=" << ctx.hub.embedding->identity() << "\n\n";

  if (!baseline_predictions_file.empty()) {
    auto base_items = io::read_eval_items(baseline_predictions_file, references_file);
    auto base_scores = eval::region_scores(base_items, *ctx.hub.embedding, tau);
    if (base_scores.size() != scores.size()) {
      std::cerr << "eval: region/setting coverage mismatch between baseline and "
                   "treated predictions\n";
      return 2;
    }

    std::map<std::string, std::vector<double>> by_region_base, by_region_treated;
    std::map<std::string, double> treated_item_scores;
    for (const auto& item : items)
      treated_item_scores[item.id] = eval::sem_score(item, *ctx.hub.embedding, tau);
    for (const auto& item : base_items) {
      auto it = treated_item_scores.find(item.id);
      if (it == treated_item_scores.end()) {
        std::cerr << "eval: item coverage mismatch at id " << item.id << "\n";
        return 2;
      }
      by_region_base[item.region].push_back(
          eval::sem_score(item, *ctx.hub.embedding, tau));
      by_region_treated[item.region].push_back(it->second);
    }
    std::map<std::string, eval::SignificanceResult> sig;
    for (const auto& [region, base_vec] : by_region_base) {
      if (base_vec.size() < 2) continue;
      core::Rng rng(core::child_seed(ctx.cfg.seed, "bootstrap", region));
      sig[region] = eval::paired_bootstrap(base_vec, by_region_treated.at(region),
                                           ctx.cfg.bootstrap_iterations, rng);
    }
    auto table = eval::comparison_table(base_scores, scores, sig);
    text << table.text;
    report["comparison"] = table.machine;
    json sig_json = json::object();
    for (const auto& [region, s] : sig)
      sig_json[region] = {{"p_value", s.p_value},
                          {"b_iterations", s.b_iterations},
                          {"winner", s.winner}};
    report["significance"] = sig_json;
  } else {
    json rows = json::array();
    std::ostringstream tbl;
    tbl << std::left << std::setw(6) << "Region" << std::setw(10) << "Setting"
        << std::right << std::setw(10) << "Score" << std::setw(8) << "N" << "\n";
    for (const auto& s : scores) {
      tbl << std::left << std::setw(6) << s.region << std::setw(10)
          << s.language_setting << std::right << std::setw(10) << std::fixed
          << std::setprecision(2) << s.score << std::setw(8) << s.n << "\n";
      rows.push_back({{"region", s.region},
                      {"setting", s.language_setting},
                      {"score", s.score},
                      {"n", s.n}});
    }
    tbl << "Macro average: " << std::fixed << std::setprecision(2)
        << eval::macro_average(scores) << "\n";
    text << tbl.str();
    report["scores"] = rows;
    report["macro_average"] = eval::macro_average(scores);
  }

  std::string report_txt = opts.out_dir + "/eval_report.txt";
  std::string report_json = opts.out_dir + "/eval_report.json";
  io::write_text_file(report_txt, text.str());
  io::write_text_file(report_json, report.dump(2) + "\n");

  json counts{{"items", items.size()}};
  ctx.manifest.record_stage(
      "eval", ctx.cfg,
      digest_files({predictions_file, references_file, baseline_predictions_file}),
      digest_files({report_txt, report_json}), counts, ctx.templates.digests(),
      backend_identities(ctx.hub), call_counts(ctx.hub));
  std::cout << text.str();
  return 0;
}

}  // namespace

int cmd_questions(const Options& opts, const std::string& seeds_file,
                  const std::string& out_file) {
  auto ctx = make_context(opts);
  auto seeds = io::read_seeds(seeds_file);
  auto result = qgen::run_question_stage(seeds, ctx.cfg, ctx.registry, ctx.templates,
                                         *ctx.hub.generation, *ctx.hub.translation,
                                         opts.limit);
  io::write_pairs(out_file, result.pairs);

  json counts{{"seeds", seeds.size()},
              {"pairs", result.pairs.size()},
              {"parse_drops", result.diagnostics.parse_drops},
              {"origin_quarantined", result.diagnostics.origin_quarantined},
              {"translation_skips", result.diagnostics.translation_skips},
              {"generation_failures", result.diagnostics.generation_failures}};
  ctx.manifest.record_stage("questions", ctx.cfg, digest_files({seeds_file}),
                            digest_files({out_file}), counts,
                            ctx.templates.digests(), backend_identities(ctx.hub),
                            call_counts(ctx.hub));
  std::cout << "questions: " << result.pairs.size() << " pairs from "
            << seeds.size() << " seeds\n";
  return 0;
}

int cmd_synthesize(const Options& opts, const std::string& pairs_file,
                   const std::string& out_file) {
  auto ctx = make_context(opts);
  auto pairs = io::read_pairs(pairs_file);
  if (opts.limit >= 0 && static_cast<long>(pairs.size()) > opts.limit)
    pairs.resize(static_cast<std::size_t>(opts.limit));

  auto result = pipeline::run_synthesis(pairs, ctx.cfg, ctx.templates,
                                        *ctx.hub.generation, *ctx.hub.embedding,
                                        *ctx.hub.translation);
  io::write_instances(out_file, result.instances);

  std::string diag_file = out_file + ".quarantine.jsonl";
  std::vector<json> diag;
  for (const auto& q : result.quarantined)
    diag.push_back({{"pair_id", q.pair_id}, {"reason", q.reason}});
  io::write_jsonl(diag_file, diag);

  json counts{{"pairs", pairs.size()},
              {"instances", result.instances.size()},
              {"quarantined", result.quarantined.size()}};
  ctx.manifest.record_stage("synthesize", ctx.cfg, digest_files({pairs_file}),
                            digest_files({out_file, diag_file}), counts,
                            ctx.templates.digests(), backend_identities(ctx.hub),
                            call_counts(ctx.hub));
  std::cout << "synthesize: " << result.instances.size() << " instances, "
            << result.quarantined.size() << " quarantined\n";
  return 0;
}

namespace {

std::vector<dataset::DialogueRecord> load_general_pool(const std::string& path) {
  std::vector<dataset::DialogueRecord> pool;
  for (const auto& j : io::read_jsonl(path)) {
    if (j.contains("schema_version")) continue;
    auto r = dataset::record_from_json(j);
    r.kind = "general";
    pool.push_back(std::move(r));
  }
  return pool;
}

}  // namespace

int cmd_build(const Options& opts, const std::string& instances_file,
              const std::string& general_file, const std::string& out_file) {
  auto ctx = make_context(opts);
  auto instances = io::read_instances(instances_file);
  auto kept = dataset::filter_regions(instances, ctx.registry);

  std::vector<dataset::DialogueRecord> cultural;
  cultural.reserve(kept.size());
  for (const auto& inst : kept)
    cultural.push_back(dataset::to_dialogue(inst, ctx.templates));

  auto pool = load_general_pool(general_file);
  core::Rng rng(core::child_seed(ctx.cfg.seed, "mix", "dataset"));
  auto mixed = dataset::mix_corpora(std::move(cultural), pool, ctx.cfg, rng);
  dataset::write_dataset(out_file, mixed);

  auto validation = dataset::validate_dataset(dataset::read_dataset(out_file));
  if (!validation.ok) {
    for (const auto& v : validation.violations) std::cerr << "invalid: " << v << "\n";
    return 1;
  }

  auto report = dataset::distribution_report(kept);
  std::string report_txt = opts.out_dir + "/distribution.txt";
  std::string report_json = opts.out_dir + "/distribution.json";
  io::write_text_file(report_txt, dataset::render_distribution(report, ctx.registry));
  io::write_text_file(report_json, dataset::distribution_to_json(report).dump(2) + "\n");

  json counts{{"instances", instances.size()},
              {"region_filtered", instances.size() - kept.size()},
              {"cultural", kept.size()},
              {"general", mixed.size() - kept.size()},
              {"records", mixed.size()}};
  ctx.manifest.record_stage("build", ctx.cfg,
                            digest_files({instances_file, general_file}),
                            digest_files({out_file, report_txt, report_json}),
                            counts, ctx.templates.digests(),
                            backend_identities(ctx.hub), call_counts(ctx.hub));
  std::cout << "build: " << mixed.size() << " records (" << kept.size()
            << " cultural)\n"
            << dataset::render_distribution(report, ctx.registry);
  return 0;
}

int cmd_eval(const Options& opts, const std::string& predictions_file,
             const std::string& references_file,
             const std::string& baseline_predictions_file) {
  auto ctx = make_context(opts);
  return eval_with_context(ctx, opts, predictions_file, references_file,
                           baseline_predictions_file);
}

int cmd_demo(const Options& opts, DemoSummary* summary) {
  Options o = opts;
  o.mock = true;
  if (!o.cache_dir) o.cache_dir = o.out_dir + "/cache";
  fs::create_directories(o.out_dir);

  const std::string seeds = o.data_dir + "/fixtures/demo_seeds.jsonl";
  const std::string general = o.data_dir + "/fixtures/general_pool.jsonl";
  const std::string pairs_file = o.out_dir + "/pairs.jsonl";
  const std::string instances_file = o.out_dir + "/instances.jsonl";
  const std::string dataset_file = o.out_dir + "/dataset.jsonl";

  auto ctx = make_context(o);

  auto result = qgen::run_question_stage(io::read_seeds(seeds), ctx.cfg,
                                         ctx.registry, ctx.templates,
                                         *ctx.hub.generation, *ctx.hub.translation,
                                         o.limit);
  io::write_pairs(pairs_file, result.pairs);

  auto synth = pipeline::run_synthesis(result.pairs, ctx.cfg, ctx.templates,
                                       *ctx.hub.generation, *ctx.hub.embedding,
                                       *ctx.hub.translation);
  io::write_instances(instances_file, synth.instances);

  auto kept = dataset::filter_regions(synth.instances, ctx.registry);
  std::vector<dataset::DialogueRecord> cultural;
  for (const auto& inst : kept)
    cultural.push_back(dataset::to_dialogue(inst, ctx.templates));
  auto pool = load_general_pool(general);
  core::Rng rng(core::child_seed(ctx.cfg.seed, "mix", "dataset"));
  auto mixed = dataset::mix_corpora(std::move(cultural), pool, ctx.cfg, rng);
  dataset::write_dataset(dataset_file, mixed);
  auto validation = dataset::validate_dataset(mixed);
  if (!validation.ok) {
    for (const auto& v : validation.violations) std::cerr << "invalid: " << v << "\n";
    return 1;
  }
  auto report = dataset::distribution_report(kept);
  io::write_text_file(o.out_dir + "/distribution.txt",
                      dataset::render_distribution(report, ctx.registry));
  io::write_text_file(o.out_dir + "/distribution.json",
                      dataset::distribution_to_json(report).dump(2) + "\n");

  // Eval leg: treated = the sampled model answers, baseline = gold echo.
  std::vector<json> preds, base_preds, refs;
  for (const auto& inst : kept) {
    std::string setting = inst.weak_language == "en" ? "english" : "local";
    preds.push_back({{"id", inst.pair_id},
                     {"region", inst.region},
                     {"language_setting", setting},
                     {"prediction", inst.model_answer}});
    base_preds.push_back({{"id", inst.pair_id},
                          {"region", inst.region},
                          {"language_setting", setting},
                          {"prediction", inst.gold}});
    refs.push_back({{"id", inst.pair_id},
                    {"golds", std::vector<std::string>{inst.gold}}});
  }
  io::write_jsonl(o.out_dir + "/predictions.jsonl", preds);
  io::write_jsonl(o.out_dir + "/baseline_predictions.jsonl", base_preds);
  io::write_jsonl(o.out_dir + "/references.jsonl", refs);

  int rc = eval_with_context(ctx, o, o.out_dir + "/predictions.jsonl",
                             o.out_dir + "/references.jsonl",
                             o.out_dir + "/baseline_predictions.jsonl");
  if (rc != 0) return rc;

  json counts{{"pairs", result.pairs.size()},
              {"instances", synth.instances.size()},
              {"quarantined", synth.quarantined.size()},
              {"records", mixed.size()}};
  ctx.manifest.record_stage("demo", ctx.cfg, digest_files({seeds, general}),
                            digest_files({pairs_file, instances_file, dataset_file}),
                            counts, ctx.templates.digests(),
                            backend_identities(ctx.hub), call_counts(ctx.hub));

  long remote_calls = ctx.hub.mock_calls().total();
  json s{{"remote_calls", remote_calls}};
  io::write_text_file(o.out_dir + "/demo_summary.json", s.dump(2) + "\n");
  std::cout << "demo: remote_calls=" << remote_calls << "\n";

  if (summary) {
    summary->pairs = static_cast<long>(result.pairs.size());
    summary->instances = static_cast<long>(synth.instances.size());
    summary->quarantined = static_cast<long>(synth.quarantined.size());
    summary->dataset_records = static_cast<long>(mixed.size());
    summary->remote_calls = remote_calls;
  }
  return 0;
}

}  // namespace xlc::cli
