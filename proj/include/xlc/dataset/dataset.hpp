#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "xlc/core/registry.hpp"
#include "xlc/core/rng.hpp"
#include "xlc/core/templates.hpp"
#include "xlc/core/types.hpp"
#include "xlc/pipeline/pipeline.hpp"

namespace xlc::dataset {

inline constexpr int kSchemaVersion = 1;

struct DialogueTurn {
  std::string role;  // "user" or "assistant"
  std::string text;
  bool loss_mask = false;  // true: turn contributes to the training loss
};

// Cultural records are exactly six turns with mask [F,T,F,T,F,T]; general
// (catastrophic-forgetting guard) records keep their own turn count and are
// exempt from the six-turn rule.
struct DialogueRecord {
  std::vector<DialogueTurn> turns;
  std::string pair_id;
  std::string region;
  std::string weak_language;
  std::string kind = "cultural";  // "cultural" | "general"
};

// question -> flawed answer -> critique request -> critique -> refinement
// request -> corrected gold, loss on assistant turns only. Turn-3/5 request
// templates are localized per weak language with English fallback.
DialogueRecord to_dialogue(const pipeline::TrainingInstance& inst,
                           const core::TemplateSet& templates);

// Keeps instances whose region is in the registry; stable order, idempotent.
std::vector<pipeline::TrainingInstance> filter_regions(
    const std::vector<pipeline::TrainingInstance>& instances,
    const core::Registry& registry);

// Draws floor(|cultural| * den / num) general records uniformly without
// replacement and emits the seeded shuffle of the union.
std::vector<DialogueRecord> mix_corpora(std::vector<DialogueRecord> cultural,
                                        const std::vector<DialogueRecord>& general_pool,
                                        const core::RunConfig& cfg, core::Rng& rng);

struct RegionCounts {
  long en_count = 0;
  long local_count = 0;
  long total() const { return en_count + local_count; }
};

struct DistributionReport {
  std::map<std::string, RegionCounts> per_region;
  RegionCounts totals;
};

// English-weak vs local-weak instance counts per region plus grand totals.
DistributionReport distribution_report(
    const std::vector<pipeline::TrainingInstance>& instances);

// Aligned plain-text table, sorted by total count descending.
std::string render_distribution(const DistributionReport& report,
                                const core::Registry& registry);
nlohmann::json distribution_to_json(const DistributionReport& report);

nlohmann::json record_to_json(const DialogueRecord& r);
DialogueRecord record_from_json(const nlohmann::json& j);

// Serializes with a schema-version record as the first line.
void write_dataset(const std::string& path, const std::vector<DialogueRecord>& records);
std::vector<DialogueRecord> read_dataset(const std::string& path);

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
};

// Re-checks the final file: six turns and the exact mask pattern on every
// cultural record, alternating roles starting with user.
ValidationResult validate_dataset(const std::vector<DialogueRecord>& records);

}  // namespace xlc::dataset
