#pragma once

#include <cstdint>
#include <random>

#include "bipsym/geometry.hpp"

namespace bipsym {

// Reproducible randomness for vertex placement. The engine is the 64-bit
// linear congruential generator x <- a*x + c (mod 2^64) with Knuth's MMIX
// constants; doubles take the top 53 bits of each draw. Both steps are fully
// specified, so a seed gives the same coordinates on every platform
// (std::uniform_real_distribution would not).
class SeededGenerator {
 public:
  using Engine = std::linear_congruential_engine<std::uint64_t,
                                                 6364136223846793005ULL,
                                                 1442695040888963407ULL, 0ULL>;

  explicit SeededGenerator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Uniform on S^3 by rejection from the cube [-1, 1]^4.
  Vector4 next_on_s3() {
    for (;;) {
      Vector4 p(next_in(-1, 1), next_in(-1, 1), next_in(-1, 1), next_in(-1, 1));
      const double n = p.norm();
      if (n > 1e-3 && n <= 1.0) return p / n;
    }
  }

 private:
  Engine engine_;
};

}  // namespace bipsym
