#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lgdet/mil.hpp"

namespace lgdet {

double sigmoid(double x);

struct ScalarLoss {
  double loss = 0.0;
  double grad = 0.0;  // d loss / d evidence
};

// Binary cross-entropy on the evidence scalar:
// loss = -[y ln s(d) + (1-y) ln(1-s(d))], grad = s(d) - y.
ScalarLoss bce_logit(double d, int y);

struct FocalParams {
  double gamma = 2.0;
  double alpha = 0.25;  // positive-class weight in (0,1]
};

// Focal loss on the evidence scalar, p_t = s(d) for y=1 and 1-s(d) for y=0:
// loss = -a_t (1-p_t)^gamma ln p_t with a_t = alpha for y=1, 1-alpha for y=0.
// alpha = 1 disables the class weight on both sides, so gamma=0, alpha=1
// reduces exactly to bce_logit.
ScalarLoss focal_logit(double d, int y, const FocalParams& fp);

struct PairwiseAucLoss {
  double loss = 0.0;
  std::vector<double> grad_pos, grad_neg;
};

// Squared-hinge pairwise ranking surrogate, averaged over all pos x neg
// pairs: mean max(0, margin - (d_p - d_n))^2. Returns nullopt when either
// side is empty (the caller drops the term for that batch).
std::optional<PairwiseAucLoss> auc_pairwise(std::span<const double> d_pos,
                                            std::span<const double> d_neg, double margin);

struct VectorLoss {
  double loss = 0.0;
  std::vector<double> grad;
};

// Mean BCE of the selected patch scores against the image label.
VectorLoss mil_patch_loss(std::span<const double> selected, int y);

// Anti-collapse penalty lambda * (mean_i tanh d_i)^2 over the full score map.
inline constexpr double kDefaultRegLambda = 0.01;
VectorLoss reg_collapse(std::span<const double> all_scores, double lambda = kDefaultRegLambda);

struct LossWeights {
  double ce = 1.0;
  double auc = 0.5;
  double mil = 0.5;
  double reg = 1.0;
};

inline double combined_total(const LossWeights& w, double ce, double auc, double mil, double reg) {
  return w.ce * ce + w.auc * auc + w.mil * mil + w.reg * reg;
}

struct LossBreakdown {
  double total = 0.0;
  double ce = 0.0, auc = 0.0, mil = 0.0, reg = 0.0;
  bool auc_active = false;
  std::vector<double> grad_scores;  // d total / d patch score, all N patches
};

// The local-branch objective for one sample. The ranking term is batch-level:
// d_pos/d_neg hold the pooled evidences of the whole batch and batch_index
// locates this sample inside its own class list (ignored when either class is
// empty, in which case the term is skipped). The returned gradient flows
// through the pooled-evidence path (CE + AUC via the top-k mean), the
// patch-loss path on the selected set, and the regularizer on all patches.
LossBreakdown local_loss(const PatchScores& scores, const MilSelection& sel, int y,
                         std::span<const double> d_pos, std::span<const double> d_neg,
                         int batch_index, const LossWeights& w, double margin = 1.0,
                         double lambda = kDefaultRegLambda);

}  // namespace lgdet
