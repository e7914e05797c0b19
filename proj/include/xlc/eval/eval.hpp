#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "xlc/backends/backend.hpp"
#include "xlc/core/rng.hpp"

namespace xlc::eval {

struct EvalItem {
  std::string id;
  std::string region;
  std::string language_setting;  // "english" | "local"
  std::string prediction;
  std::vector<std::string> golds;  // non-empty
};

struct RegionScore {
  std::string region;
  std::string language_setting;
  double score = 0.0;  // percentage in [0, 100]
  long n = 0;
};

struct SignificanceResult {
  double p_value = 1.0;
  long b_iterations = 0;
  std::string winner = "none";  // "a" | "b" | "none"
};

// Thresholded max-cosine against the gold set: 1 if any gold embedding is
// within tau of the prediction embedding, else 0. This is a documented
// stand-in metric; every report carries the metric name, tau, and embedder
// identity. Empty predictions score 0.
double sem_score(const EvalItem& item, backends::EmbeddingBackend& emb, double tau);

// 100 * mean sem_score per (region, language_setting), n recorded.
std::vector<RegionScore> region_scores(const std::vector<EvalItem>& items,
                                       backends::EmbeddingBackend& emb, double tau);

// Unweighted mean over regions: each region counts once regardless of n.
double macro_average(const std::vector<RegionScore>& scores);

// One-sided paired bootstrap: resamples item indices with replacement;
// p = fraction of resamples where the full-sample winner fails to beat the
// loser; winner declared only at p < 0.05. Element-wise equal inputs give
// winner "none".
SignificanceResult paired_bootstrap(const std::vector<double>& per_item_a,
                                    const std::vector<double>& per_item_b,
                                    long b_iterations, core::Rng& rng);

struct ComparisonTable {
  std::string text;
  nlohmann::json machine;  // parseable twin; reproduces all cell values
};

// Per-region rows, Avg column, significance bolding per cell.
ComparisonTable comparison_table(const std::vector<RegionScore>& baseline,
                                 const std::vector<RegionScore>& treated,
                                 const std::map<std::string, SignificanceResult>& sig);

struct AblationCell {
  bool filter = false;
  bool consistency = false;
  double avg_local = 0.0;
  double avg_en = 0.0;
};

// Filter x consistency grid in the ablation layout.
std::string render_ablation_grid(const std::vector<AblationCell>& cells);

}  // namespace xlc::eval
