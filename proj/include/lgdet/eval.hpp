#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lgdet/degrade.hpp"
#include "lgdet/image.hpp"

namespace lgdet {

struct ScoredItem {
  std::string id;
  double score = 0.0;  // probability or evidence; AUC only uses the ordering
  int label = 0;
};

// Rank-based ROC AUC with midrank tie handling. Equals the O(P*N) pairwise
// count (ties worth 1/2) exactly. Throws MetricUndefinedError unless both
// classes are present.
double roc_auc(std::span<const ScoredItem> items);

// Mean probability over `target` uniformly spaced frames, index
// floor(j * (F-1) / (target-1)); all frames when fewer than `target`.
double video_score(std::span<const double> frame_probs, int target = 32);

struct SweepRow {
  std::string axis;
  double level = 0.0;
  std::string system;
  double auc = 0.0;
  int n_pos = 0, n_neg = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::uint64_t seed = 0;
  int images_per_level = 0;
};

struct EvalImage {
  std::string id;
  ImageF32 image;  // native resolution, pre-degradation
  int label = 0;
};

using ProbScorer = std::function<double(const ImageF32&)>;

// For each ladder level, degrade every image with exactly one perturbation at
// that severity (jpeg_qf -> jpeg_quantize, blur_sigma -> gaussian_blur,
// resize_scale -> resize to floor(s*H) x floor(s*W) and back), then score all
// systems on the identical degraded images and compute per-system AUC.
SweepReport robustness_sweep(const std::vector<std::pair<std::string, ProbScorer>>& systems,
                             std::span<const EvalImage> dataset, const SeverityLadder& ladder,
                             std::uint64_t seed);

std::string sweep_report_csv(const SweepReport& report);

struct FailureRow {
  std::string id;
  int label = 0;
  double score = 0.0;
  std::string kind;  // "fn" (fake scored real) or "fp" (real scored fake)
};

// Misclassifications at the threshold (predicted fake iff score >= threshold),
// false negatives first ordered most-confident-error first, then false
// positives likewise.
std::vector<FailureRow> export_failures(std::span<const ScoredItem> items, double threshold);

std::string failures_csv(std::span<const FailureRow> rows);

}  // namespace lgdet
