#pragma once

#include <cstdint>

namespace qsvtpoly {

/// SplitMix64 (Steele/Lea/Vigna): a 64-bit counter-based generator with a
/// fixed golden-ratio increment. Chosen because the stream is defined by the
/// seed alone, identically on every platform, which makes the perturbation
/// experiments reproducible from the seed recorded in the outputs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

} // namespace qsvtpoly
