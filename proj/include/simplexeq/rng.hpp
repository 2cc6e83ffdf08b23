#pragma once

#include <cstdint>
#include <random>

namespace simplexeq {

/// Deterministic integer draws shared by the generator and the sampled
/// verifier. std::mt19937_64 has a standard-pinned output stream, and the
/// bounded draw below uses plain rejection instead of
/// std::uniform_int_distribution (whose mapping is implementation-defined),
/// so a seed produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace simplexeq
