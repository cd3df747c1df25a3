#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgdet/degrade.hpp"
#include "lgdet/image.hpp"
#include "lgdet/losses.hpp"
#include "lgdet/mil.hpp"

namespace lgdet {

enum class Branch { global, local };
enum class LossSchedule { focal, ce_then_focal, local_combo };
enum class ParamGroup { backbone, head };

const char* branch_name(Branch b);
Branch branch_from_name(const std::string& s);
const char* schedule_name(LossSchedule s);
LossSchedule schedule_from_name(const std::string& s);

struct ModelSpec {
  std::string id;
  Branch branch = Branch::global;
  int train_res = 64, infer_res = 64;
  int patch_size = 8;
  int channels = 3;
  int feature_dim = 64;
  double rho = 0.1;  // MIL selection ratio, local branch
  bool tta_flip = false;
  LossSchedule schedule = LossSchedule::focal;
  std::string init_from;  // checkpoint path for continuation training; empty = fresh

  void validate() const;
};

struct ParamSegment {
  std::string name;
  std::size_t offset = 0, count = 0;
  ParamGroup group = ParamGroup::backbone;
};

// All trainable parameters as one named flat vector.
struct Params {
  std::vector<ParamSegment> segments;
  std::vector<double> values;

  std::span<double> seg(std::string_view name);
  std::span<const double> seg(std::string_view name) const;
};

// The trainable detector. A small patch encoder (affine D->F, ReLU, affine
// F->F) feeds two heads: a per-patch affine F->2 producing the local response
// map, and a two-layer global head F->256->2 (ReLU, Dropout 0.1 on the hidden
// layer during training) over the mean-pooled patch features.
struct Detector {
  ModelSpec spec;
  Params params;

  int in_dim() const { return spec.patch_size * spec.patch_size * spec.channels; }

  static Detector init(const ModelSpec& spec, std::uint64_t seed);
};

struct GlobalLogits {
  double l_real = 0.0, l_fake = 0.0;
  double evidence() const { return l_fake - l_real; }
};

// Forward passes expect the image already at a model resolution: both sides
// must be multiples of the patch size (any such size works; pooling and the
// per-patch head are grid-size independent).
GlobalLogits forward_global(const Detector& det, const ImageF32& img, bool train_mode = false,
                            std::uint64_t dropout_seed = 0);
PatchScores forward_local(const Detector& det, const ImageF32& img);

// Evidence of an image at native resolution: preprocess to spec.infer_res,
// then branch dispatch (global: l_fake - l_real; local: top-k pooled d_img).
// tta averages the evidence of the image and its horizontal flip.
double model_evidence(const Detector& det, const ImageF32& native_img, bool tta);

// Parallel batch scorer (order-independent: one output slot per image).
std::vector<double> score_evidence_batch(const Detector& det, std::span<const ImageF32> imgs,
                                         bool tta);

// ---------------------------------------------------------------------------
// Training

enum class AugmentMode { none, random_policy, fixed_chain };

struct TrainConfig {
  double lr_backbone = 3e-3, lr_head = 1e-2;
  double beta1 = 0.9, beta2 = 0.999;
  double weight_decay = 1e-2;
  double clip_norm = 1.0;
  double eps = 1e-8;
  int epochs = 4, batch_size = 32;
  std::uint64_t seed = 0;
  AugmentMode augment = AugmentMode::none;
  DegradationSpec augment_chain;  // ops for fixed_chain mode; per-sample seeds are derived
  FocalParams focal;
  LossWeights weights;
  double auc_margin = 1.0;
  double reg_lambda = kDefaultRegLambda;
};

struct TrainBatch {
  std::vector<ImageF32> images;  // at the model's training resolution
  std::vector<int> labels;
};

enum class StepLoss { bce, focal };

struct BatchEval {
  double loss = 0.0;
  double ce = 0.0, auc = 0.0, mil = 0.0, reg = 0.0;  // local branch term means
  std::vector<double> grad;                          // d loss / d params
};

// Mean per-sample loss over the batch; full-parameter gradient.
BatchEval global_batch_grad(const Detector& det, const TrainBatch& batch, StepLoss kind,
                            const FocalParams& fp, bool train_mode, std::uint64_t step_seed);

// Local-branch batch objective:
//   (1/B) sum_b [w_ce ce_b + w_mil mil_b + w_reg reg_b] + w_auc auc(batch)
// where the ranking term pairs the pooled evidences across the batch and is
// skipped for single-class batches.
BatchEval local_batch_grad(const Detector& det, const TrainBatch& batch, double rho,
                           const LossWeights& w, double margin, double lambda);

// Scales g so its global L2 norm is at most max_norm; returns the pre-clip norm.
double clip_global_norm(std::vector<double>& g, double max_norm);

struct AdamState {
  std::vector<double> m, v;
  long step = 0;
  double beta1_pow = 1.0, beta2_pow = 1.0;
};

// One AdamW update: clip the gradient to cfg.clip_norm, then apply
// bias-corrected moments with decoupled weight decay. The learning rate is
// per parameter group (encoder = lr_backbone, heads = lr_head).
void adamw_step(AdamState& state, Params& params, std::vector<double> grad,
                const TrainConfig& cfg);

// ---------------------------------------------------------------------------
// Data

struct ManifestRecord {
  std::string path;  // resolved, loadable
  std::string id;    // manifest-relative path without extension
  int label = 0;
  std::string source;
  double weight = 1.0;
};

struct DatasetManifest {
  std::vector<ManifestRecord> records;
};

// CSV with header "path,label,source,weight"; paths resolve relative to the
// manifest's directory.
DatasetManifest load_manifest(const std::string& path);

// Sampling with replacement, probability proportional to record weight.
std::vector<int> weighted_sample(const DatasetManifest& manifest, int batch_size,
                                 std::uint64_t seed);

// ---------------------------------------------------------------------------
// Training loop

struct TrainLogRow {
  int epoch = 0;
  long step = 0;
  double mean_loss = 0.0;
  double val_auc = 0.0;
};

struct TrainOutcome {
  Detector best;
  double best_val_auc = -1.0;  // -1 until the first validation pass
  long total_steps = 0;
  long switch_step = 0;  // ce->focal boundary, 0 when the schedule has none
  long diverged_at = 0;  // step of the first non-finite loss/gradient, 0 = clean run
  std::vector<TrainLogRow> log;

  bool diverged() const { return diverged_at != 0; }
};

// Deterministic given cfg.seed. Keeps the epoch checkpoint with the highest
// validation AUC. A non-finite loss or gradient stops training; the outcome
// still carries the last good checkpoint (the best epoch so far, or the
// initial parameters when nothing validated yet) with diverged_at set.
TrainOutcome train_model(const ModelSpec& spec, const TrainConfig& cfg,
                         const DatasetManifest& train_set, const DatasetManifest& val_set,
                         const std::optional<Detector>& init_from = std::nullopt);

// ---------------------------------------------------------------------------
// Checkpoints (binary container, byte layout documented in the README)

void save_checkpoint(const std::string& path, const Detector& det, std::uint64_t seed,
                     long steps, double best_val_auc);

struct Checkpoint {
  Detector det;
  std::uint64_t seed = 0;
  long steps = 0;
  double best_val_auc = 0.0;
};

Checkpoint load_checkpoint(const std::string& path);

// ---------------------------------------------------------------------------
// Logits files: the interchange format between models (internal or external)
// and the fusion stage. CSV header "model_id,image_id,l_real,l_fake".

struct LogitRow {
  std::string model_id, image_id;
  double l_real = 0.0, l_fake = 0.0;
  double evidence() const { return l_fake - l_real; }
};

struct LogitsTable {
  std::vector<LogitRow> rows;
};

LogitsTable load_external_logits(const std::string& path);
void save_logits(const std::string& path, std::span<const LogitRow> rows);

}  // namespace lgdet
