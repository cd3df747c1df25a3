#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgdet/image.hpp"
#include "lgdet/model.hpp"

namespace lgdet {

enum class ArtifactFamily { local_texture, global_stat };

const char* artifact_family_name(ArtifactFamily f);
ArtifactFamily artifact_family_from_name(const std::string& s);

// Procedural dataset: "real" images are smooth sinusoidal gradients plus
// fine-grain noise; "fake" images carry either a spatially confined
// high-variance texture patch (local_texture, the evidence-dilution regime)
// or a full-image channel-correlation shift (global_stat, a cue visible only
// in global statistics).
struct SynthConfig {
  int height = 64, width = 64, channels = 3;
  int patch_size = 8;
  double forged_fraction = 0.08;  // fraction of patches the forged rectangle covers
  ArtifactFamily family = ArtifactFamily::local_texture;
  std::uint64_t seed = 0;
  int n_train = 2000, n_val = 500, n_test = 500;

  void validate() const;
  int grid_rows() const { return height / patch_size; }
  int grid_cols() const { return width / patch_size; }
};

ImageF32 gen_real(const SynthConfig& cfg, std::uint64_t index);

struct FakeSample {
  ImageF32 image;
  std::vector<std::uint8_t> mask;  // one flag per patch, row-major grid order
  ImageF32 base;                   // the untouched carrier image
};

FakeSample gen_fake(const SynthConfig& cfg, std::uint64_t index);

// Writes PPM images, per-fake sidecar masks (<id>.mask, one '0'/'1' char per
// patch) and manifest_{train,val,test}.csv under out_dir. Splits are
// class-balanced and index-disjoint. Returns the three manifest paths.
struct SplitPaths {
  std::string train, val, test;
};

SplitPaths gen_split(const SynthConfig& cfg, const std::string& out_dir);

}  // namespace lgdet
