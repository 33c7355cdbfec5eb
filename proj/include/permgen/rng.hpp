#pragma once

#include <cstdint>

namespace permgen {

/// Counter-based deterministic generator (splitmix64 core).
///
/// Every (seed, stream) pair yields an independent sequence, so experiments
/// can hand each trial its own stream keyed by the trial index. Results are
/// then independent of how trials are scheduled across workers, and the
/// output is identical on every platform (no library distributions are
/// involved anywhere).
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : state_(mix(seed ^ 0x9E3779B97F4A7C15ull) ^
               mix(stream + 0xD1B54A32D192ED03ull)) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform draw in [0, bound), unbiased via rejection.
  uint64_t below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    uint64_t v = next_u64();
    while (v < min) v = next_u64();
    return v % bound;
  }

  /// 53-bit mantissa double in [0,1). Diagnostics only; never feeds an
  /// exact computation.
  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace permgen
