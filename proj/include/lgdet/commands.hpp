#pragma once

#include <string>
#include <vector>

#include "lgdet/config.hpp"

namespace lgdet {

// The CLI verbs. Each is idempotent given (config, seed, inputs), never
// mutates its inputs, and writes byte-reproducible primary outputs under
// cfg.out_dir. Errors surface as the exception types in errors.hpp; the CLI
// maps them to exit codes.

void cmd_synth(const RunConfig& cfg);
void cmd_train(const RunConfig& cfg, const std::string& model_id);
std::string cmd_infer(const RunConfig& cfg, const std::string& model_id,
                      const std::string& manifest_path);  // returns the logits file path
std::string cmd_fuse(const RunConfig& cfg, const std::vector<std::string>& logits_files,
                     FusionStrategy strategy);  // returns the scores file path
void cmd_eval(const RunConfig& cfg, const std::string& scores_path);
void cmd_sweep(const RunConfig& cfg);
void cmd_ablate(const RunConfig& cfg);

// labels from either a manifest (path,label,source,weight) or a plain
// (image_id,label) csv, keyed by image id
std::vector<std::pair<std::string, int>> load_labels(const std::string& path);

}  // namespace lgdet
