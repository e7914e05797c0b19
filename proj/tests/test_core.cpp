#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "xlc/core/config.hpp"
#include "xlc/core/registry.hpp"
#include "xlc/core/rng.hpp"
#include "xlc/core/templates.hpp"

using namespace xlc::core;

namespace {

const std::string kData = std::string(XLC_SOURCE_DIR) + "/data";

std::string write_temp(const std::string& content) {
  static int counter = 0;
  std::string path = "core_test_tmp_" + std::to_string(counter++) + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("config defaults fill for omitted keys") {
  auto path = write_temp("{}");
  auto cfg = load_config(path);
  CHECK(cfg.n_samples == 5);
  CHECK(cfg.ratio_cultural_to_general == Ratio{3, 1});
  CHECK(cfg.sem_threshold == doctest::Approx(0.5));
  CHECK(cfg.consistency_mode == SelectionMode::consistency);
  CHECK(cfg.language_filter);
  std::remove(path.c_str());
}

TEST_CASE("config rejects n_samples below 2") {
  auto path = write_temp(R"({"n_samples": 1})");
  CHECK_THROWS_WITH_AS(load_config(path), "n_samples must be >= 2", ConfigError);
  std::remove(path.c_str());
}

TEST_CASE("ratio string parses to components") {
  CHECK(parse_ratio("3:1") == Ratio{3, 1});
  CHECK(parse_ratio("7:2") == Ratio{7, 2});
  CHECK_THROWS_AS(parse_ratio("3"), ConfigError);
  CHECK_THROWS_AS(parse_ratio("0:1"), ConfigError);
  CHECK_THROWS_AS(parse_ratio("-3:1"), ConfigError);
}

TEST_CASE("config parse failure names the file") {
  auto path = write_temp("{nope");
  CHECK_THROWS_AS(load_config(path), ConfigError);
  std::remove(path.c_str());
}

TEST_CASE("config invariant checks name the field") {
  auto bad_tau = write_temp(R"({"sem_threshold": 1.5})");
  CHECK_THROWS_WITH_AS(load_config(bad_tau), "sem_threshold must lie in (0, 1]",
                       ConfigError);
  std::remove(bad_tau.c_str());
}

TEST_CASE("config round-trips through serialization") {
  auto path = write_temp(
      R"({"n_samples": 7, "ratio": "5:2", "seed": 123, "consistency_mode": "random",
          "language_filter": false, "sem_threshold": 0.8,
          "temperatures": {"answer": 0.9}})");
  auto cfg = load_config(path);
  auto reparsed = config_from_json(config_to_json(cfg));
  CHECK(reparsed == cfg);
  std::remove(path.c_str());
}

TEST_CASE("region registry holds the 16 expected entries") {
  auto reg = Registry::load(kData + "/regions.tsv", kData + "/languages.tsv",
                            kData + "/region_aliases.tsv");
  REQUIRE(reg.regions().size() == 16);
  CHECK(reg.regions().front().code == "UK");
  CHECK(reg.regions().front().display_name == "United Kingdom");
  CHECK(reg.has_region("JB"));
  CHECK(reg.region("JB")->display_name == "Western Java");

  std::set<std::string> codes;
  for (const auto& r : reg.regions()) codes.insert(r.code);
  for (const char* c : {"UK", "US", "CN", "ES", "MX", "DZ", "GR", "KR", "JB",
                        "IR", "ID", "AZ", "KP", "NG", "AS", "ET"})
    CHECK(codes.count(c) == 1);
}

TEST_CASE("language registry holds the 13 target languages") {
  auto reg = Registry::load(kData + "/regions.tsv", kData + "/languages.tsv");
  CHECK(reg.languages().size() == 13);
  for (const char* c : {"en", "zh", "es", "id", "ko", "el", "fa", "ar", "az",
                        "su", "as", "ha", "am"})
    CHECK(reg.has_language(c));
  CHECK_FALSE(reg.has_language("fr"));
}

TEST_CASE("origin normalization maps aliases and quarantines the unknown") {
  auto reg = Registry::load(kData + "/regions.tsv", kData + "/languages.tsv",
                            kData + "/region_aliases.tsv");
  CHECK(reg.normalize_origin("South Korea") == "KR");
  CHECK(reg.normalize_origin("s. korea") == "KR");
  CHECK(reg.normalize_origin("CN") == "CN");
  CHECK(reg.normalize_origin("china") == "CN");
  CHECK(reg.normalize_origin(" West Java ") == "JB");
  CHECK_FALSE(reg.normalize_origin("Atlantis").has_value());
}

TEST_CASE("every region language appears in the language registry") {
  auto reg = Registry::load(kData + "/regions.tsv", kData + "/languages.tsv");
  for (const auto& r : reg.regions()) CHECK(reg.has_language(r.language));
}

TEST_CASE("child seeds differ across stage and item") {
  auto a = child_seed(1, "sample", "pair-1");
  CHECK(a == child_seed(1, "sample", "pair-1"));
  CHECK(a != child_seed(1, "sample", "pair-2"));
  CHECK(a != child_seed(1, "critique", "pair-1"));
  CHECK(a != child_seed(2, "sample", "pair-1"));
}

TEST_CASE("template rendering substitutes placeholders and localizes") {
  auto ts = TemplateSet::load(kData + "/templates");
  auto rendered = TemplateSet::render("Q: {question} R: {reference}",
                                      {{"question", "q"}, {"reference", "r"}});
  CHECK(rendered == "Q: q R: r");
  CHECK(ts.get_localized("critique_request", "zh") != ts.get("critique_request"));
  CHECK(ts.get_localized("critique_request", "ko") == ts.get("critique_request"));
  CHECK(ts.digests().count("paragraph") == 1);
}
