#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgdet/degrade.hpp"
#include "lgdet/ensemble.hpp"
#include "lgdet/model.hpp"
#include "lgdet/synth.hpp"

namespace lgdet {

struct SynthDatasetEntry {
  std::string name;
  SynthConfig synth;
  bool seed_explicit = false;  // otherwise derived from the run seed and name
};

struct ModelEntry {
  ModelSpec spec;
  TrainConfig train;
  bool augment = false;      // apply the run's degradation policy during training
  std::string data;          // synth dataset name providing train/val manifests
  std::string train_manifest, val_manifest;  // explicit alternative to `data`
  std::string init_from;     // model id whose checkpoint seeds continuation training
  std::string weights_from;  // inference alias: run this model's checkpoint at our regime
};

enum class FusionStrategy { logit, probability, majority };

const char* fusion_strategy_name(FusionStrategy s);
FusionStrategy fusion_strategy_from_name(const std::string& s);

// One experiment = one config file; command-line flags win over file values.
struct RunConfig {
  std::uint64_t seed = 0;
  std::string out_dir = "runs/out";

  std::vector<SynthDatasetEntry> datasets;
  bool mixed_test = false;

  // training-time degradation policy for models with augment=true
  enum class AugmentPolicy { random, fixed, none };
  AugmentPolicy augment_policy = AugmentPolicy::random;
  DegradationSpec fixed_chain;

  std::vector<ModelEntry> models;

  EnsembleConfig ensemble;
  FusionStrategy strategy = FusionStrategy::logit;

  std::string eval_labels;  // labels csv or manifest; required by eval/ablate
  double threshold = 0.5;
  bool group_videos = false;
  int video_frames = 32;

  std::vector<std::string> sweep_models;  // model ids, or "ensemble"
  std::string sweep_manifest;
  int sweep_per_level = 500;
  std::vector<LadderAxis> sweep_axes;

  std::vector<std::string> ablate_logits;
  std::string ablate_labels;
  std::vector<std::vector<std::string>> sub_ensembles;
  std::vector<FusionStrategy> strategies;

  std::uint64_t config_hash = 0;  // FNV-1a of the resolved canonical form

  const ModelEntry& model(const std::string& id) const;
};

// Parses and schema-validates; unknown keys are rejected with their path.
RunConfig load_config(const std::string& path);

// Re-resolve the hash after command-line overrides.
void rehash_config(RunConfig& cfg);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace lgdet
