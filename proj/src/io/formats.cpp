#include "xlc/io/formats.hpp"

#include <map>

#include "xlc/io/jsonl.hpp"

namespace xlc::io {

using nlohmann::json;

std::vector<qgen::AssertionSeed> read_seeds(const std::string& path) {
  std::vector<qgen::AssertionSeed> out;
  for (const auto& j : read_jsonl(path)) {
    qgen::AssertionSeed s;
    s.id = j.at("id").get<std::string>();
    s.text = j.at("text").get<std::string>();
    s.source = j.value("source", "other");
    if (s.text.empty()) throw FileError("seed " + s.id + " has empty text");
    out.push_back(std::move(s));
  }
  return out;
}

json pair_to_json(const core::BilingualQuestionPair& p) {
  return {{"id", p.id},
          {"english_text", p.english_text},
          {"local_text", p.local_text},
          {"language", p.language},
          {"region", p.region},
          {"source_id", p.source_id}};
}

core::BilingualQuestionPair pair_from_json(const json& j) {
  core::BilingualQuestionPair p;
  p.id = j.at("id").get<std::string>();
  p.english_text = j.at("english_text").get<std::string>();
  p.local_text = j.at("local_text").get<std::string>();
  p.language = j.at("language").get<std::string>();
  p.region = j.at("region").get<std::string>();
  p.source_id = j.value("source_id", "");
  return p;
}

void write_pairs(const std::string& path,
                 const std::vector<core::BilingualQuestionPair>& pairs) {
  std::vector<json> lines;
  lines.reserve(pairs.size());
  for (const auto& p : pairs) lines.push_back(pair_to_json(p));
  write_jsonl(path, lines);
}

std::vector<core::BilingualQuestionPair> read_pairs(const std::string& path) {
  std::vector<core::BilingualQuestionPair> out;
  for (const auto& j : read_jsonl(path)) out.push_back(pair_from_json(j));
  return out;
}

json instance_to_json(const pipeline::TrainingInstance& inst) {
  return {{"pair_id", inst.pair_id},
          {"question_weak", inst.question_weak},
          {"model_answer", inst.model_answer},
          {"critique", inst.critique},
          {"gold", inst.gold},
          {"region", inst.region},
          {"weak_language", inst.weak_language},
          {"selection",
           {{"c_en", inst.c_en},
            {"c_local", inst.c_local},
            {"stronger", inst.stronger},
            {"medoid", inst.medoid},
            {"mode", core::to_string(inst.mode)}}}};
}

pipeline::TrainingInstance instance_from_json(const json& j) {
  pipeline::TrainingInstance inst;
  inst.pair_id = j.at("pair_id").get<std::string>();
  inst.question_weak = j.at("question_weak").get<std::string>();
  inst.model_answer = j.at("model_answer").get<std::string>();
  inst.critique = j.at("critique").get<std::string>();
  inst.gold = j.at("gold").get<std::string>();
  inst.region = j.at("region").get<std::string>();
  inst.weak_language = j.at("weak_language").get<std::string>();
  if (j.contains("selection")) {
    const auto& s = j.at("selection");
    inst.c_en = s.value("c_en", 0.0);
    inst.c_local = s.value("c_local", 0.0);
    inst.stronger = s.value("stronger", "");
    inst.medoid = s.value("medoid", std::size_t{0});
    inst.mode = s.value("mode", "consistency") == "random"
                    ? core::SelectionMode::random
                    : core::SelectionMode::consistency;
  }
  return inst;
}

void write_instances(const std::string& path,
                     const std::vector<pipeline::TrainingInstance>& instances) {
  std::vector<json> lines;
  lines.reserve(instances.size());
  for (const auto& inst : instances) lines.push_back(instance_to_json(inst));
  write_jsonl(path, lines);
}

std::vector<pipeline::TrainingInstance> read_instances(const std::string& path) {
  std::vector<pipeline::TrainingInstance> out;
  for (const auto& j : read_jsonl(path)) out.push_back(instance_from_json(j));
  return out;
}

std::vector<eval::EvalItem> read_eval_items(const std::string& predictions_path,
                                            const std::string& references_path) {
  std::map<std::string, std::vector<std::string>> golds;
  for (const auto& j : read_jsonl(references_path))
    golds[j.at("id").get<std::string>()] =
        j.at("golds").get<std::vector<std::string>>();

  std::vector<eval::EvalItem> out;
  for (const auto& j : read_jsonl(predictions_path)) {
    eval::EvalItem item;
    item.id = j.at("id").get<std::string>();
    item.region = j.at("region").get<std::string>();
    item.language_setting = j.at("language_setting").get<std::string>();
    item.prediction = j.at("prediction").get<std::string>();
    auto it = golds.find(item.id);
    if (it == golds.end())
      throw FileError("prediction " + item.id + " has no reference entry");
    item.golds = it->second;
    if (item.golds.empty())
      throw FileError("reference " + item.id + " has empty gold list");
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace xlc::io
