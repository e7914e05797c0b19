#include "xlc/eval/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "xlc/sim/similarity.hpp"

namespace xlc::eval {

using nlohmann::json;

double sem_score(const EvalItem& item, backends::EmbeddingBackend& emb, double tau) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument("sem_score: tau must lie in (0, 1]");
  if (item.golds.empty())
    throw std::invalid_argument("sem_score: item has no gold references");
  if (item.prediction.empty()) return 0.0;

  std::vector<std::string> batch;
  batch.reserve(item.golds.size() + 1);
  batch.push_back(item.prediction);
  for (const auto& g : item.golds) batch.push_back(g);
  auto vecs = emb.embed(batch);

  double best = -1.0;
  for (std::size_t i = 1; i < vecs.size(); ++i)
    best = std::max(best, sim::cosine(vecs[0], vecs[i]));
  return best >= tau ? 1.0 : 0.0;
}

std::vector<RegionScore> region_scores(const std::vector<EvalItem>& items,
                                       backends::EmbeddingBackend& emb, double tau) {
  struct Acc {
    double sum = 0.0;
    long n = 0;
  };
  std::map<std::pair<std::string, std::string>, Acc> acc;
  for (const auto& item : items) {
    auto& a = acc[{item.region, item.language_setting}];
    a.sum += sem_score(item, emb, tau);
    ++a.n;
  }
  std::vector<RegionScore> out;
  out.reserve(acc.size());
  for (const auto& [key, a] : acc)
    out.push_back({key.first, key.second, 100.0 * a.sum / a.n, a.n});
  return out;
}

double macro_average(const std::vector<RegionScore>& scores) {
  if (scores.empty())
    throw std::invalid_argument("macro_average: empty score list");
  double sum = 0.0;
  for (const auto& s : scores) sum += s.score;
  return sum / static_cast<double>(scores.size());
}

SignificanceResult paired_bootstrap(const std::vector<double>& per_item_a,
                                    const std::vector<double>& per_item_b,
                                    long b_iterations, core::Rng& rng) {
  const std::size_t n = per_item_a.size();
  if (n != per_item_b.size())
    throw std::invalid_argument("paired_bootstrap: length mismatch");
  if (n < 2)
    throw std::invalid_argument("paired_bootstrap: need at least 2 items");
  if (b_iterations < 1)
    throw std::invalid_argument("paired_bootstrap: b_iterations must be >= 1");

  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += per_item_a[i];
    mean_b += per_item_b[i];
  }
  mean_a /= n;
  mean_b /= n;

  SignificanceResult result;
  result.b_iterations = b_iterations;
  if (mean_a == mean_b) {
    result.p_value = 1.0;
    return result;
  }
  const bool b_leads = mean_b > mean_a;

  long failures = 0;  // resamples where the observed winner does not exceed
  for (long it = 0; it < b_iterations; ++it) {
    double diff = 0.0;  // winner minus loser
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t i = rng.uniform_index(n);
      diff += b_leads ? per_item_b[i] - per_item_a[i]
                      : per_item_a[i] - per_item_b[i];
    }
    if (diff <= 0.0) ++failures;
  }
  result.p_value = static_cast<double>(failures) / static_cast<double>(b_iterations);
  if (result.p_value < 0.05) result.winner = b_leads ? "b" : "a";
  return result;
}

namespace {

std::string cell(double v, bool bold) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << v;
  return bold ? "*" + ss.str() + "*" : ss.str();
}

}  // namespace

ComparisonTable comparison_table(const std::vector<RegionScore>& baseline,
                                 const std::vector<RegionScore>& treated,
                                 const std::map<std::string, SignificanceResult>& sig) {
  if (baseline.size() != treated.size())
    throw std::invalid_argument("comparison_table: coverage mismatch");
  std::map<std::pair<std::string, std::string>, double> treated_by_key;
  for (const auto& s : treated) treated_by_key[{s.region, s.language_setting}] = s.score;

  std::ostringstream out;
  out << std::left << std::setw(6) << "Region" << std::setw(10) << "Setting"
      << std::right << std::setw(12) << "Baseline" << std::setw(12) << "Treated"
      << "\n";
  json rows = json::array();
  double base_sum = 0.0, treat_sum = 0.0;
  for (const auto& b : baseline) {
    auto it = treated_by_key.find({b.region, b.language_setting});
    if (it == treated_by_key.end())
      throw std::invalid_argument("comparison_table: region coverage mismatch at " +
                                  b.region + "/" + b.language_setting);
    double t = it->second;
    std::string winner = "none";
    if (auto s = sig.find(b.region); s != sig.end()) winner = s->second.winner;
    out << std::left << std::setw(6) << b.region << std::setw(10)
        << b.language_setting << std::right << std::setw(12)
        << cell(b.score, winner == "a") << std::setw(12)
        << cell(t, winner == "b") << "\n";
    rows.push_back({{"region", b.region},
                    {"setting", b.language_setting},
                    {"baseline", b.score},
                    {"treated", t},
                    {"winner", winner}});
    base_sum += b.score;
    treat_sum += t;
  }
  double base_avg = base_sum / baseline.size();
  double treat_avg = treat_sum / baseline.size();
  out << std::left << std::setw(6) << "Avg" << std::setw(10) << "" << std::right
      << std::setw(12) << cell(base_avg, false) << std::setw(12)
      << cell(treat_avg, false) << "\n";

  ComparisonTable table;
  table.text = out.str();
  table.machine = {{"rows", rows},
                   {"avg", {{"baseline", base_avg}, {"treated", treat_avg}}}};
  return table;
}

std::string render_ablation_grid(const std::vector<AblationCell>& cells) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "Filter" << std::setw(14) << "Consistency"
      << std::right << std::setw(12) << "Avg Local" << std::setw(10) << "Avg EN"
      << "\n";
  for (const auto& c : cells)
    out << std::left << std::setw(8) << (c.filter ? "yes" : "--") << std::setw(14)
        << (c.consistency ? "yes" : "--") << std::right << std::setw(12)
        << std::fixed << std::setprecision(2) << c.avg_local << std::setw(10)
        << c.avg_en << "\n";
  return out.str();
}

}  // namespace xlc::eval
