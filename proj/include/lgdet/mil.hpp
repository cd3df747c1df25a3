#pragma once

#include <vector>

namespace lgdet {

// Per-patch logit differences d_i = l_fake_i - l_real_i over a rows x cols
// grid, row-major.
struct PatchScores {
  std::vector<double> scores;
  int rows = 0, cols = 0;
};

// Top-k selection over patch scores: k = max(1, floor(rho * N)), ties broken
// by lowest index, d_img = mean of the selected scores.
struct MilSelection {
  std::vector<int> indices;  // the selected index set, in selection order
  int k = 0;
  int n = 0;  // total score count the selection was made over
  double rho = 0.1;
  double d_img = 0.0;
};

MilSelection select_topk(const PatchScores& scores, double rho);

// Subgradient of the pooled score with the index set held fixed:
// grad_i = upstream / k on selected indices, 0 elsewhere.
std::vector<double> topk_backward(const MilSelection& sel, double upstream);

}  // namespace lgdet
