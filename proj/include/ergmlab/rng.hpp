#pragma once

#include <cstdint>
#include <random>

namespace ergm {

/// Deterministic 64-bit-seeded generator with an explicit uniform mapping.
///
/// Wraps std::mt19937_64 but owns the conversion to doubles and bounded
/// integers so that streams are reproducible bit-for-bit from the seed alone
/// (std's distribution objects make no cross-implementation guarantee).
/// Streams for parallel chains are derived as seed + chain_index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_chain(std::uint64_t seed, std::uint64_t chain_index) {
    return Rng(seed + chain_index);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Rejection from the top of the range keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Bernoulli(p) event.
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ergm
