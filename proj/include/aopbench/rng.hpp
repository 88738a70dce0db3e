#pragma once

#include <cstdint>

namespace aopbench {

/// Deterministic 64-bit generator (SplitMix64). Used everywhere instead of
/// <random> distributions so that seeded runs are bit-identical across
/// platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller (deterministic, no cached spare).
  double gaussian();

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a master seed and up to two
/// counters. Used by the sweep harness to assign per-trial seeds before
/// dispatch.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

}  // namespace aopbench
