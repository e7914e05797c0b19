#include "xlc/dataset/dataset.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "xlc/io/jsonl.hpp"

namespace xlc::dataset {

using nlohmann::json;

DialogueRecord to_dialogue(const pipeline::TrainingInstance& inst,
                           const core::TemplateSet& templates) {
  if (inst.question_weak.empty() || inst.model_answer.empty() ||
      inst.critique.empty() || inst.gold.empty())
    throw std::invalid_argument("to_dialogue: instance has empty tuple field");

  DialogueRecord r;
  r.pair_id = inst.pair_id;
  r.region = inst.region;
  r.weak_language = inst.weak_language;
  r.kind = "cultural";
  r.turns = {
      {"user", inst.question_weak, false},
      {"assistant", inst.model_answer, true},
      {"user", templates.get_localized("critique_request", inst.weak_language), false},
      {"assistant", inst.critique, true},
      {"user", templates.get_localized("refinement_request", inst.weak_language), false},
      {"assistant", inst.gold, true},
  };
  return r;
}

std::vector<pipeline::TrainingInstance> filter_regions(
    const std::vector<pipeline::TrainingInstance>& instances,
    const core::Registry& registry) {
  std::vector<pipeline::TrainingInstance> out;
  out.reserve(instances.size());
  for (const auto& inst : instances)
    if (registry.has_region(inst.region)) out.push_back(inst);
  return out;
}

std::vector<DialogueRecord> mix_corpora(std::vector<DialogueRecord> cultural,
                                        const std::vector<DialogueRecord>& general_pool,
                                        const core::RunConfig& cfg, core::Rng& rng) {
  const auto& ratio = cfg.ratio_cultural_to_general;
  const std::size_t need = cultural.size() * static_cast<std::size_t>(ratio.den) /
                           static_cast<std::size_t>(ratio.num);
  if (general_pool.size() < need)
    throw std::invalid_argument(
        "mix_corpora: general pool too small, required " + std::to_string(need) +
        " but only " + std::to_string(general_pool.size()) + " available");

  std::vector<std::size_t> indices(general_pool.size());
  std::iota(indices.begin(), indices.end(), 0);
  rng.shuffle(indices);

  std::vector<DialogueRecord> out = std::move(cultural);
  for (std::size_t k = 0; k < need; ++k) {
    DialogueRecord g = general_pool[indices[k]];
    g.kind = "general";
    out.push_back(std::move(g));
  }
  rng.shuffle(out);
  return out;
}

DistributionReport distribution_report(
    const std::vector<pipeline::TrainingInstance>& instances) {
  DistributionReport report;
  for (const auto& inst : instances) {
    auto& rc = report.per_region[inst.region];
    if (inst.weak_language == "en") {
      ++rc.en_count;
      ++report.totals.en_count;
    } else {
      ++rc.local_count;
      ++report.totals.local_count;
    }
  }
  return report;
}

std::string render_distribution(const DistributionReport& report,
                                const core::Registry& registry) {
  std::vector<std::pair<std::string, RegionCounts>> rows(report.per_region.begin(),
                                                         report.per_region.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.total() != b.second.total())
      return a.second.total() > b.second.total();
    return a.first < b.first;
  });

  std::ostringstream out;
  out << std::left << std::setw(6) << "Code" << std::setw(22) << "Region"
      << std::right << std::setw(8) << "En" << std::setw(8) << "Local"
      << std::setw(8) << "Total" << "\n";
  for (const auto& [code, rc] : rows) {
    const auto* entry = registry.region(code);
    out << std::left << std::setw(6) << code << std::setw(22)
        << (entry ? entry->display_name : "(unknown)") << std::right
        << std::setw(8) << rc.en_count << std::setw(8) << rc.local_count
        << std::setw(8) << rc.total() << "\n";
  }
  out << std::left << std::setw(6) << "" << std::setw(22) << "Total"
      << std::right << std::setw(8) << report.totals.en_count << std::setw(8)
      << report.totals.local_count << std::setw(8) << report.totals.total()
      << "\n";
  return out.str();
}

json distribution_to_json(const DistributionReport& report) {
  json regions = json::object();
  for (const auto& [code, rc] : report.per_region)
    regions[code] = {{"en", rc.en_count},
                     {"local", rc.local_count},
                     {"total", rc.total()}};
  return {{"regions", regions},
          {"totals",
           {{"en", report.totals.en_count},
            {"local", report.totals.local_count},
            {"total", report.totals.total()}}}};
}

json record_to_json(const DialogueRecord& r) {
  json turns = json::array();
  for (const auto& t : r.turns)
    turns.push_back({{"role", t.role}, {"text", t.text}, {"loss_mask", t.loss_mask}});
  return {{"turns", turns},
          {"meta",
           {{"pair_id", r.pair_id},
            {"region", r.region},
            {"weak_language", r.weak_language},
            {"kind", r.kind}}}};
}

DialogueRecord record_from_json(const json& j) {
  DialogueRecord r;
  for (const auto& t : j.at("turns"))
    r.turns.push_back({t.at("role").get<std::string>(),
                       t.at("text").get<std::string>(),
                       t.at("loss_mask").get<bool>()});
  const auto& meta = j.at("meta");
  r.pair_id = meta.value("pair_id", "");
  r.region = meta.value("region", "");
  r.weak_language = meta.value("weak_language", "");
  r.kind = meta.value("kind", "cultural");
  return r;
}

void write_dataset(const std::string& path, const std::vector<DialogueRecord>& records) {
  std::vector<json> lines;
  lines.reserve(records.size() + 1);
  lines.push_back({{"schema_version", kSchemaVersion}});
  for (const auto& r : records) lines.push_back(record_to_json(r));
  io::write_jsonl(path, lines);
}

std::vector<DialogueRecord> read_dataset(const std::string& path) {
  auto lines = io::read_jsonl(path);
  if (lines.empty() || !lines.front().contains("schema_version"))
    throw io::FileError("dataset missing schema_version header: " + path);
  int v = lines.front().at("schema_version").get<int>();
  if (v != kSchemaVersion)
    throw io::FileError("unsupported dataset schema version " + std::to_string(v));
  std::vector<DialogueRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i)
    out.push_back(record_from_json(lines[i]));
  return out;
}

ValidationResult validate_dataset(const std::vector<DialogueRecord>& records) {
  static constexpr std::array<bool, 6> kMask = {false, true, false, true, false, true};
  ValidationResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    auto flag = [&](const std::string& what) {
      result.ok = false;
      result.violations.push_back("record " + std::to_string(i) + " (" +
                                  r.pair_id + "): " + what);
    };
    for (std::size_t t = 0; t < r.turns.size(); ++t) {
      const char* want = t % 2 == 0 ? "user" : "assistant";
      if (r.turns[t].role != want) {
        flag("turn " + std::to_string(t + 1) + " role must be " + want);
        break;
      }
    }
    if (r.kind == "cultural") {
      if (r.turns.size() != 6) {
        flag("cultural record must have exactly 6 turns, has " +
             std::to_string(r.turns.size()));
        continue;
      }
      for (std::size_t t = 0; t < 6; ++t)
        if (r.turns[t].loss_mask != kMask[t]) {
          flag("loss mask mismatch at turn " + std::to_string(t + 1));
          break;
        }
    }
  }
  return result;
}

}  // namespace xlc::dataset
