#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xlc/cli/commands.hpp"

namespace {

void add_common(CLI::App* cmd, xlc::cli::Options& opts, std::uint64_t& seed,
                std::string& mode, int& lang_filter, std::string& ratio,
                double& tau, int& iters, std::string& cache) {
  cmd->add_option("--config", opts.config_path, "Config file (JSON)");
  cmd->add_option("--seed", seed, "Master seed override");
  cmd->add_option("--mode", mode, "Ground-truth selection: consistency|random");
  cmd->add_option("--language-filter", lang_filter,
                  "Restrict to registry languages: 1|0");
  cmd->add_option("--ratio", ratio, "Cultural:general mixing ratio, e.g. 3:1");
  cmd->add_option("--tau", tau, "Semantic match threshold in (0,1]");
  cmd->add_option("--bootstrap-iters", iters, "Bootstrap resampling iterations");
  cmd->add_option("--cache", cache, "Response cache directory");
  cmd->add_flag("--mock", opts.mock, "Force mock backends");
  cmd->add_option("--limit", opts.limit, "Process at most N input items");
  cmd->add_option("--data", opts.data_dir, "Data directory (registries, templates)");
  cmd->add_option("--out", opts.out_dir, "Output directory (manifest, reports)");
}

void apply_common(xlc::cli::Options& opts, const CLI::App* cmd, std::uint64_t seed,
                  const std::string& mode, int lang_filter, const std::string& ratio,
                  double tau, int iters, const std::string& cache) {
  if (cmd->count("--seed")) opts.seed = seed;
  if (cmd->count("--mode")) opts.mode = mode;
  if (cmd->count("--language-filter")) opts.language_filter = lang_filter != 0;
  if (cmd->count("--ratio")) opts.ratio = ratio;
  if (cmd->count("--tau")) opts.tau = tau;
  if (cmd->count("--bootstrap-iters")) opts.bootstrap_iters = iters;
  if (cmd->count("--cache")) opts.cache_dir = cache;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilingual self-consistency training-data pipeline"};
  app.require_subcommand(1);

  struct SubState {
    xlc::cli::Options opts;
    std::uint64_t seed = 0;
    std::string mode, ratio, cache;
    int lang_filter = 1, iters = 10000;
    double tau = 0.5;
    std::string in1, in2, in3;
  };

  SubState q, s, b, e, d;

  auto* questions = app.add_subcommand("questions", "Seeds -> bilingual question pairs");
  questions->add_option("seeds", q.in1, "Assertion seeds (JSONL)")->required();
  questions->add_option("pairs_out", q.in2, "Output pairs file (JSONL)")->required();
  add_common(questions, q.opts, q.seed, q.mode, q.lang_filter, q.ratio, q.tau,
             q.iters, q.cache);

  auto* synthesize =
      app.add_subcommand("synthesize", "Pairs -> critique-augmented instances");
  synthesize->add_option("pairs", s.in1, "Bilingual pairs (JSONL)")->required();
  synthesize->add_option("instances_out", s.in2, "Output instances file")->required();
  add_common(synthesize, s.opts, s.seed, s.mode, s.lang_filter, s.ratio, s.tau,
             s.iters, s.cache);

  auto* build = app.add_subcommand("build", "Instances -> mixed dialogue dataset");
  build->add_option("instances", b.in1, "Training instances (JSONL)")->required();
  build->add_option("general", b.in2, "General-corpus pool (JSONL)")->required();
  build->add_option("dataset_out", b.in3, "Output dataset file")->required();
  add_common(build, b.opts, b.seed, b.mode, b.lang_filter, b.ratio, b.tau, b.iters,
             b.cache);

  auto* evaluate = app.add_subcommand("eval", "Score predictions against references");
  evaluate->add_option("predictions", e.in1, "Predictions (JSONL)")->required();
  evaluate->add_option("references", e.in2, "References (JSONL)")->required();
  evaluate->add_option("--baseline", e.in3, "Baseline predictions for significance");
  add_common(evaluate, e.opts, e.seed, e.mode, e.lang_filter, e.ratio, e.tau,
             e.iters, e.cache);

  auto* demo = app.add_subcommand("demo", "End-to-end run on bundled mock fixtures");
  add_common(demo, d.opts, d.seed, d.mode, d.lang_filter, d.ratio, d.tau, d.iters,
             d.cache);

  CLI11_PARSE(app, argc, argv);

  try {
    if (questions->parsed()) {
      apply_common(q.opts, questions, q.seed, q.mode, q.lang_filter, q.ratio, q.tau,
                   q.iters, q.cache);
      return xlc::cli::cmd_questions(q.opts, q.in1, q.in2);
    }
    if (synthesize->parsed()) {
      apply_common(s.opts, synthesize, s.seed, s.mode, s.lang_filter, s.ratio, s.tau,
                   s.iters, s.cache);
      return xlc::cli::cmd_synthesize(s.opts, s.in1, s.in2);
    }
    if (build->parsed()) {
      apply_common(b.opts, build, b.seed, b.mode, b.lang_filter, b.ratio, b.tau,
                   b.iters, b.cache);
      return xlc::cli::cmd_build(b.opts, b.in1, b.in2, b.in3);
    }
    if (evaluate->parsed()) {
      apply_common(e.opts, evaluate, e.seed, e.mode, e.lang_filter, e.ratio, e.tau,
                   e.iters, e.cache);
      return xlc::cli::cmd_eval(e.opts, e.in1, e.in2, e.in3);
    }
    if (demo->parsed()) {
      apply_common(d.opts, demo, d.seed, d.mode, d.lang_filter, d.ratio, d.tau,
                   d.iters, d.cache);
      return xlc::cli::cmd_demo(d.opts);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
