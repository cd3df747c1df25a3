#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lgdet/image.hpp"

namespace lgdet {

enum class DegKind {
  gaussian_blur,
  gaussian_noise,
  jpeg_quantize,
  color_shift,
  spatial_distort,
  grayscale,
};

const char* deg_kind_name(DegKind k);
DegKind deg_kind_from_name(const std::string& name);

// One parameterized perturbation. Use the factories; they validate ranges.
struct DegradationOp {
  DegKind kind = DegKind::grayscale;
  double sigma = 0.0;                          // gaussian_blur, >= 0
  double noise_std = 0.0;                      // gaussian_noise, >= 0 on the [0,1] scale
  int quality = 90;                            // jpeg_quantize, 1..100
  std::array<double, 3> gain = {1, 1, 1};      // color_shift, > 0
  std::array<double, 3> offset = {0, 0, 0};    // color_shift
  double scale = 0.5;                          // spatial_distort, in (0,1)

  static DegradationOp blur(double sigma);
  static DegradationOp noise(double std_dev);
  static DegradationOp jpeg(int quality);
  static DegradationOp color(std::array<double, 3> gain, std::array<double, 3> offset);
  static DegradationOp distort(double scale);
  static DegradationOp gray();
};

// An ordered, seeded chain of perturbations. Identical (spec, input) pairs
// produce bit-identical outputs: all randomness comes from spec.seed through
// the splitmix64 counter streams in rng.hpp.
struct DegradationSpec {
  std::vector<DegradationOp> ops;
  std::uint64_t seed = 0;
};

ImageF32 apply_degradation(const ImageF32& img, const DegradationSpec& spec);

// The individual kernels. All clamp their output to [0,1].
ImageF32 gaussian_blur(const ImageF32& img, double sigma);  // radius = ceil(3*sigma), edge replicate
ImageF32 add_gaussian_noise(const ImageF32& img, double std_dev, std::uint64_t key);
ImageF32 color_shift(const ImageF32& img, const std::array<double, 3>& gain,
                     const std::array<double, 3>& offset);
ImageF32 spatial_distort(const ImageF32& img, double scale);  // down to floor(s*H) x floor(s*W), back up
ImageF32 grayscale(const ImageF32& img);                      // luma 0.299 r + 0.587 g + 0.114 b

// Compression distortion modeled as luma-channel 8x8 block-DCT quantization
// with the standard luminance table scaled by the quality factor. Chroma is
// passed through untouched; no bytestream is produced.
ImageF32 jpeg_quantize(const ImageF32& img, int quality);

// quality-scaled table: scale = 5000/q for q < 50, else 200 - 2q;
// entry = clamp(floor((Q * scale + 50) / 100), 1, 255)
std::array<int, 64> jpeg_quant_table(int quality);

enum class LadderAxis { jpeg_qf, resize_scale, blur_sigma };

const char* ladder_axis_name(LadderAxis a);
LadderAxis ladder_axis_from_name(const std::string& name);

// Severity ladder for robustness sweeps. Levels must be strictly monotone in
// the axis' severity direction: jpeg_qf descends, the others ascend.
struct SeverityLadder {
  LadderAxis axis = LadderAxis::jpeg_qf;
  std::vector<double> levels;
};

SeverityLadder make_ladder(LadderAxis axis, std::vector<double> levels);
SeverityLadder ladder_default(LadderAxis axis);

// Training-time augmentation policy: pick 0-2 distinct perturbation groups
// uniformly, then draw each parameter uniformly from its training range.
// Everything is derived from `seed`.
DegradationSpec sample_policy_spec(std::uint64_t seed);

}  // namespace lgdet
