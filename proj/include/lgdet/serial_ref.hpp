#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lgdet/image.hpp"
#include "lgdet/model.hpp"

namespace lgdet::serial {

// Plain single-threaded counterparts of the OpenMP kernels. Each computes the
// same per-element expressions in the same order, so outputs must be
// bit-identical to the parallel versions under any thread count; tests and
// the bench_kernels tool rely on that.

ImageF32 resize_bilinear(const ImageF32& img, int out_h, int out_w);
ImageF32 gaussian_blur(const ImageF32& img, double sigma);
ImageF32 add_gaussian_noise(const ImageF32& img, double std_dev, std::uint64_t key);
ImageF32 jpeg_quantize(const ImageF32& img, int quality);

std::vector<double> score_evidence_batch(const Detector& det, std::span<const ImageF32> imgs,
                                         bool tta);

}  // namespace lgdet::serial
