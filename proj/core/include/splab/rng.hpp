#pragma once

#include <cstdint>

namespace splab {

/// Counter-based splitmix64 stream. Same seed, same platform, same sequence;
/// used wherever reproducible draws are needed (map generation, point
/// sampling, CLI defaults).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) with 53 bits of precision.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-1,1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace splab
