#include <doctest.h>

#include <algorithm>
#include <random>

#include "xlc/backends/mock.hpp"
#include "xlc/eval/eval.hpp"

using namespace xlc;
using namespace xlc::eval;

namespace {

EvalItem item(const std::string& id, const std::string& region,
              const std::string& setting, const std::string& pred,
              std::vector<std::string> golds) {
  return {id, region, setting, pred, std::move(golds)};
}

// Oracle resampler written independently of the implementation: same
// estimator, different code path and stdlib RNG.
double oracle_bootstrap_p(const std::vector<double>& a, const std::vector<double>& b,
                          long iters, unsigned seed) {
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= a.size();
  mb /= b.size();
  if (ma == mb) return 1.0;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  long fail = 0;
  for (long it = 0; it < iters; ++it) {
    double d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::size_t i = pick(gen);
      d += mb > ma ? b[i] - a[i] : a[i] - b[i];
    }
    if (d <= 0) ++fail;
  }
  return static_cast<double>(fail) / iters;
}

}  // namespace

TEST_CASE("sem_score matches on identical text and misses orthogonal text") {
  backends::MockEmbedder emb;
  CHECK(sem_score(item("1", "CN", "local", "tea", {"tea"}), emb, 0.5) == 1.0);
  // Distinct mock texts embed to near-orthogonal random unit vectors.
  CHECK(sem_score(item("2", "CN", "local", "tea", {"completely different"}), emb, 0.5) == 0.0);
  CHECK(sem_score(item("3", "CN", "local", "", {"gold"}), emb, 0.5) == 0.0);
  CHECK_THROWS_AS(sem_score(item("4", "CN", "local", "p", {}), emb, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(sem_score(item("5", "CN", "local", "p", {"g"}), emb, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sem_score(item("6", "CN", "local", "p", {"g"}), emb, 1.5),
                  std::invalid_argument);
}

TEST_CASE("sem_score honors the collapse table and max over golds") {
  backends::MockEmbedderConfig cfg;
  cfg.collapse = {{"green tea", "tea"}, {"tea", "tea"}};
  backends::MockEmbedder emb(cfg);
  // "green tea" collapses onto "tea": cosine 1 >= tau.
  CHECK(sem_score(item("1", "CN", "local", "green tea", {"coffee", "tea"}), emb, 0.9) == 1.0);
  CHECK(sem_score(item("2", "CN", "local", "green tea", {"coffee"}), emb, 0.9) == 0.0);
}

TEST_CASE("sem_score is monotone non-increasing in tau") {
  backends::MockEmbedder emb;
  auto it = item("1", "CN", "local", "some text", {"some text", "other"});
  double prev = 1.0;
  for (double tau : {0.1, 0.5, 0.9, 1.0}) {
    double s = sem_score(it, emb, tau);
    CHECK(s <= prev);
    prev = s;
  }
}

TEST_CASE("region_scores averages per (region, setting) cell") {
  backends::MockEmbedderConfig cfg;
  cfg.collapse = {{"hit", "gold"}, {"gold", "gold"}};
  backends::MockEmbedder emb(cfg);
  std::vector<EvalItem> items = {
      item("1", "CN", "local", "hit", {"gold"}),
      item("2", "CN", "local", "miss", {"gold"}),
      item("3", "KR", "english", "hit", {"gold"}),
  };
  auto scores = region_scores(items, emb, 0.9);
  REQUIRE(scores.size() == 2);
  auto cn = std::find_if(scores.begin(), scores.end(),
                         [](const RegionScore& s) { return s.region == "CN"; });
  REQUIRE(cn != scores.end());
  CHECK(cn->score == doctest::Approx(50.0));
  CHECK(cn->n == 2);
  auto kr = std::find_if(scores.begin(), scores.end(),
                         [](const RegionScore& s) { return s.region == "KR"; });
  REQUIRE(kr != scores.end());
  CHECK(kr->score == doctest::Approx(100.0));
  CHECK(kr->language_setting == "english");
}

TEST_CASE("region_scores 200-item aggregation matches a hand count") {
  backends::MockEmbedderConfig cfg;
  cfg.collapse = {{"hit", "gold"}, {"gold", "gold"}};
  backends::MockEmbedder emb(cfg);
  std::vector<EvalItem> items;
  // 200 items over 4 regions; region r gets 25 + 5r hits out of 50.
  const char* regions[4] = {"CN", "KR", "GR", "IR"};
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < 50; ++i)
      items.push_back(item(std::to_string(r * 50 + i), regions[r], "local",
                           i < 25 + 5 * r ? "hit" : "miss-" + std::to_string(i),
                           {"gold"}));
  auto scores = region_scores(items, emb, 0.9);
  REQUIRE(scores.size() == 4);
  for (const auto& s : scores) {
    int r = static_cast<int>(std::find(regions, regions + 4, s.region) - regions);
    CHECK(s.n == 50);
    CHECK(s.score == doctest::Approx(100.0 * (25 + 5 * r) / 50.0));
  }
  // Macro average over the four regions: (50 + 60 + 70 + 80) / 4.
  CHECK(macro_average(scores) == doctest::Approx(65.0));
}

TEST_CASE("macro_average is unweighted and permutation invariant") {
  std::vector<RegionScore> scores = {{"A", "local", 40.0, 1000},
                                     {"B", "local", 80.0, 2}};
  CHECK(macro_average(scores) == doctest::Approx(60.0));  // n ignored
  std::reverse(scores.begin(), scores.end());
  CHECK(macro_average(scores) == doctest::Approx(60.0));
  CHECK(macro_average({{"A", "local", 42.5, 10}}) == doctest::Approx(42.5));
  CHECK_THROWS_AS(macro_average({}), std::invalid_argument);
}

TEST_CASE("paired_bootstrap on identical inputs declares no winner") {
  std::vector<double> a = {1, 0, 1, 1, 0, 1};
  core::Rng rng(3);
  auto r = paired_bootstrap(a, a, 1000, rng);
  CHECK(r.winner == "none");
  CHECK(r.p_value == 1.0);
}

TEST_CASE("paired_bootstrap detects a uniform +1 shift decisively") {
  std::vector<double> a, b;
  for (int i = 0; i < 100; ++i) {
    a.push_back(i % 2);
    b.push_back(i % 2 + 1.0);
  }
  core::Rng rng(17);
  auto r = paired_bootstrap(a, b, 2000, rng);
  CHECK(r.winner == "b");
  CHECK(r.p_value <= 0.001);
  // Symmetric: swapping the arguments flips the winner.
  core::Rng rng2(17);
  auto r2 = paired_bootstrap(b, a, 2000, rng2);
  CHECK(r2.winner == "a");
}

TEST_CASE("paired_bootstrap agrees with an independent resampler") {
  // Planted fixture: b beats a on 60% of items, loses on 40%, n = 500.
  std::vector<double> a(500, 0.0), b(500, 0.0);
  for (int i = 0; i < 500; ++i) {
    if (i % 5 < 3) b[i] = a[i] + 1.0;
    else b[i] = a[i] - 1.0;
  }
  core::Rng rng(99);
  auto r = paired_bootstrap(a, b, 5000, rng);
  double oracle = oracle_bootstrap_p(a, b, 5000, 1234);
  CHECK(r.winner == "b");
  CHECK(std::abs(r.p_value - oracle) <= 0.01);
}

TEST_CASE("paired_bootstrap input validation") {
  core::Rng rng(1);
  CHECK_THROWS_AS(paired_bootstrap({1, 0}, {1}, 10, rng), std::invalid_argument);
  CHECK_THROWS_AS(paired_bootstrap({1}, {1}, 10, rng), std::invalid_argument);
  CHECK_THROWS_AS(paired_bootstrap({1, 0}, {0, 1}, 0, rng), std::invalid_argument);
}

TEST_CASE("comparison_table round-trips values through the machine twin") {
  std::vector<RegionScore> base = {{"CN", "local", 40.0, 10}, {"KR", "local", 55.5, 10}};
  std::vector<RegionScore> treat = {{"CN", "local", 62.25, 10}, {"KR", "local", 50.0, 10}};
  std::map<std::string, SignificanceResult> sig;
  sig["CN"] = {0.01, 1000, "b"};
  sig["KR"] = {0.4, 1000, "none"};

  auto table = comparison_table(base, treat, sig);
  CHECK(table.text.find("*62.25*") != std::string::npos);  // winner bolded
  CHECK(table.text.find("*50.00*") == std::string::npos);  // no winner, no bold
  CHECK(table.text.find("Avg") != std::string::npos);

  const auto& rows = table.machine.at("rows");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("region") == "CN");
  CHECK(rows[0].at("baseline").get<double>() == doctest::Approx(40.0));
  CHECK(rows[0].at("treated").get<double>() == doctest::Approx(62.25));
  CHECK(rows[0].at("winner") == "b");
  CHECK(table.machine.at("avg").at("baseline").get<double>() ==
        doctest::Approx((40.0 + 55.5) / 2));
  CHECK(table.machine.at("avg").at("treated").get<double>() ==
        doctest::Approx((62.25 + 50.0) / 2));

  CHECK_THROWS_AS(comparison_table(base, {treat[0]}, sig), std::invalid_argument);
}

TEST_CASE("ablation grid prints one row per cell") {
  std::vector<AblationCell> cells = {{false, false, 41.0, 50.0},
                                     {false, true, 44.0, 52.0},
                                     {true, false, 46.0, 53.0},
                                     {true, true, 49.5, 55.0}};
  auto text = render_ablation_grid(cells);
  CHECK(text.find("49.50") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);  // header + 4 rows
}
