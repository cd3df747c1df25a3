#pragma once

#include <cmath>
#include <cstdint>

namespace lgdet {

// Every random draw in this project comes from splitmix64 (the SplittableRandom
// finalizer). Two access patterns:
//   SeqRng     - walks the canonical splitmix64 sequence, for sequential draws
//                (samplers, parameter init, policy sampling).
//   CounterRng - indexes the sequence as a counter stream, value(i) =
//                finalize(key + GOLDEN * i). Order-independent, so bulk fills
//                (noise planes, synthetic textures) stay bit-identical under
//                any parallel schedule.
// Keys are derived from a user seed plus stream tags via mix_key.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t splitmix64_fin(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t key, std::uint64_t v) {
  return splitmix64_fin(key ^ (splitmix64_fin(v + kGolden) + kGolden + (key << 6) + (key >> 2)));
}

inline std::uint64_t mix_key(std::uint64_t key, std::uint64_t a, std::uint64_t b) {
  return mix_key(mix_key(key, a), b);
}

inline std::uint64_t mix_key(std::uint64_t key, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_key(mix_key(key, a, b), c);
}

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct CounterRng {
  std::uint64_t key = 0;

  explicit CounterRng(std::uint64_t k) : key(k) {}

  std::uint64_t bits(std::uint64_t ctr) const { return splitmix64_fin(key + kGolden * ctr); }

  // uniform in [0,1)
  double u01(std::uint64_t ctr) const { return double(bits(ctr) >> 11) * 0x1p-53; }

  // standard normal via Box-Muller on counters (2*ctr, 2*ctr+1)
  double normal(std::uint64_t ctr) const {
    double u1 = double((bits(2 * ctr) >> 11) + 1) * 0x1p-53;  // (0,1], safe for log
    double u2 = double(bits(2 * ctr + 1) >> 11) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }
};

struct SeqRng {
  std::uint64_t state = 0;

  explicit SeqRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += kGolden;
    return splitmix64_fin(state);
  }

  double u01() { return double(next() >> 11) * 0x1p-53; }  // [0,1)

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    std::uint64_t v = std::uint64_t(u01() * double(n));
    return v >= n ? n - 1 : v;
  }

  double normal() {
    double u1 = double((next() >> 11) + 1) * 0x1p-53;
    double u2 = double(next() >> 11) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }
};

}  // namespace lgdet
