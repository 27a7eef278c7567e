#pragma once

#include <cstdint>

namespace ramsey {

// Deterministic splittable RNG. Every sampling site forks a private stream
// from (master seed, phase, index), so adding phases or layers never
// perturbs draws made elsewhere. The generator itself is splitmix64; doubles
// are built from the high 53 bits, which keeps streams bit-identical across
// platforms.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed), state_(mix(seed)) {}

  // Stream ids for the sampling phases of the pipeline.
  enum Phase : std::uint64_t {
    kGnp = 1,
    kBlockPresence = 2,
    kBlockSubsample = 3,
    kLayerSkeleton = 4,
    kBicliqueSubsample = 5,
    kCoupling = 6,
    kColouring = 7,
    kPartition = 8,
    kExperiment = 9,
    kWitnessSearch = 10,
    kProbe = 11,
  };

  SplitRng fork(std::uint64_t phase, std::uint64_t index = 0) const {
    std::uint64_t s = seed_;
    s = mix(s ^ mix(phase + 0x9e3779b97f4a7c15ULL));
    s = mix(s ^ mix(index + 0x7f4a7c159e3779b9ULL));
    return SplitRng(s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling on the top bits; bias-free and deterministic.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace ramsey
