#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xlc/eval/eval.hpp"
#include "xlc/pipeline/pipeline.hpp"
#include "xlc/qgen/questiongen.hpp"

namespace xlc::io {

// JSONL codecs for the stage boundary files.

std::vector<qgen::AssertionSeed> read_seeds(const std::string& path);

nlohmann::json pair_to_json(const core::BilingualQuestionPair& p);
core::BilingualQuestionPair pair_from_json(const nlohmann::json& j);
void write_pairs(const std::string& path,
                 const std::vector<core::BilingualQuestionPair>& pairs);
std::vector<core::BilingualQuestionPair> read_pairs(const std::string& path);

nlohmann::json instance_to_json(const pipeline::TrainingInstance& inst);
pipeline::TrainingInstance instance_from_json(const nlohmann::json& j);
void write_instances(const std::string& path,
                     const std::vector<pipeline::TrainingInstance>& instances);
std::vector<pipeline::TrainingInstance> read_instances(const std::string& path);

// Predictions: {id, region, language_setting, prediction}
// References:  {id, golds: [text, ...]}
std::vector<eval::EvalItem> read_eval_items(const std::string& predictions_path,
                                            const std::string& references_path);

}  // namespace xlc::io
