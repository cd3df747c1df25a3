#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lgdet {

// Row-major H x W x C rasters with interleaved channels, C in {1,3}.
struct ImageU8 {
  int height = 0, width = 0, channels = 0;
  std::vector<std::uint8_t> data;

  ImageU8() = default;
  ImageU8(int h, int w, int c);

  std::uint8_t& at(int y, int x, int c) {
    return data[(std::size_t(y) * width + x) * channels + c];
  }
  std::uint8_t at(int y, int x, int c) const {
    return data[(std::size_t(y) * width + x) * channels + c];
  }
};

struct ImageF32 {
  int height = 0, width = 0, channels = 0;
  std::vector<float> data;

  ImageF32() = default;
  ImageF32(int h, int w, int c);

  float& at(int y, int x, int c) { return data[(std::size_t(y) * width + x) * channels + c]; }
  float at(int y, int x, int c) const {
    return data[(std::size_t(y) * width + x) * channels + c];
  }
  std::size_t size() const { return data.size(); }
};

// Non-overlapping tiling of an image whose sides are exact multiples of
// patch_size. Patches are stored in row-major grid order.
struct PatchGrid {
  int patch_size = 0, rows = 0, cols = 0;
  std::vector<ImageF32> patches;
};

// Binary PPM (P6, 3 channels) / PGM (P5, 1 channel), maxval 255, the only
// image container in this project. Loading rejects anything else with a
// FormatError carrying the byte offset of the problem.
ImageU8 load_ppm(const std::string& path);
void save_ppm(const std::string& path, const ImageU8& img);

ImageF32 to_f32(const ImageU8& img);  // f = u / 255 exactly
ImageU8 to_u8(const ImageF32& img);   // round half up, clamped to [0,255]

// Bilinear resize with half-pixel-centered sample coordinates
// (align-corners = false). Output values are convex combinations of inputs,
// so they never leave the input range.
ImageF32 resize_bilinear(const ImageF32& img, int out_h, int out_w);

ImageF32 hflip(const ImageF32& img);

PatchGrid extract_patches(const ImageF32& img, int patch_size);
ImageF32 stitch_patches(const PatchGrid& grid);

// Model-input convention used everywhere: resize the shorter side to `res`,
// center-crop to a square, then (if needed) resize to exactly res x res.
ImageF32 preprocess_to(const ImageF32& img, int res);

}  // namespace lgdet
