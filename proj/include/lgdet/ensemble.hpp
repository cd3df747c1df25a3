#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lgdet/image.hpp"

namespace lgdet {

// Directional evidence of one model for one image: d = l_fake - l_real.
// Positive favors the fake class.
struct Evidence {
  std::string model_id;
  double d = 0.0;
};

// Member list with normalized fusion weights (default uniform 1/M).
struct EnsembleConfig {
  std::vector<std::string> members;
  std::vector<double> weights;

  static EnsembleConfig uniform(std::vector<std::string> members);
  // validates alpha_m >= 0, sum > 0, then rescales to sum 1
  void normalize();
};

struct FusedPrediction {
  double d_bar = 0.0;
  double p = 0.0;  // sigma(d_bar), exactly
  std::vector<Evidence> members;
};

// Logit-space fusion: d_bar = sum alpha_m d_m, p = sigma(d_bar). Members are
// summed in model-id order, so the result is exactly permutation invariant.
FusedPrediction fuse_logits(std::span<const Evidence> evidence, const EnsembleConfig& cfg);

// Probability averaging baseline: p = sum alpha_m sigma(d_m).
double fuse_probabilities(std::span<const Evidence> evidence, const EnsembleConfig& cfg);

struct VoteResult {
  int label = 0;  // 1 = fake
  bool tie = false;
};

// Each member votes fake iff d_m > threshold; exact ties resolve to real
// with the tie flag set.
VoteResult majority_vote(std::span<const Evidence> evidence, double threshold = 0.0);

// Flip test-time augmentation: evidence averaged over the image and its
// horizontal flip, before any sigmoid.
Evidence tta_flip(const std::function<double(const ImageF32&)>& evidence_fn, const ImageF32& img,
                  const std::string& model_id);

}  // namespace lgdet
