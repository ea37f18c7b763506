#pragma once

#include <cstdint>
#include <random>

namespace cbgen {

// Seeded random stream with portable draws. All helpers are implemented on
// top of raw mt19937_64 output, so identical seeds give identical values on
// every platform with 64-bit words (the standard library distributions are
// implementation-defined and would break byte-reproducibility).
//
// Sub-streams are derived from the parent's seed and a tag, never from its
// consumption state, so derived streams are stable no matter how much the
// parent has been used. Running per-cluster work serially or in parallel
// therefore produces identical graphs.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    std::uint64_t r = engine_();
    while (r < threshold) r = engine_();
    return r % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  // Child stream identified by tag. Uses the splitmix64 output function so
  // nearby tags map to unrelated seeds.
  RandomStream derive(std::uint64_t tag) const {
    std::uint64_t z = seed_ + (tag + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return RandomStream(z);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cbgen
