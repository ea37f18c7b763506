#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/random.hpp"

namespace cbgen {

// Truncated discrete power law: P(x) proportional to x^(-exponent) for
// integer x in [lo, hi].
struct PowerLawSpec {
  double exponent = 2.0;
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;

  void validate() const;  // throws ConfigError
};

// Cumulative table over [lo, hi]; draws are a binary search over it.
class PowerLawTable {
 public:
  explicit PowerLawTable(const PowerLawSpec& spec);

  std::uint32_t sample(RandomStream& rng) const;

  // Exact E[X] of the truncated distribution.
  double mean() const { return mean_; }

 private:
  std::uint32_t lo_;
  std::vector<double> cdf_;
  double mean_;
};

// One draw from the truncated power law. Builds the table; use PowerLawTable
// directly for repeated draws.
std::uint32_t sample_power_law(const PowerLawSpec& spec, RandomStream& rng);

struct DegreeSequence {
  // Sorted non-increasing, even sum.
  std::vector<std::uint32_t> weights;

  std::uint64_t total() const;
};

struct CommunitySizes {
  // Sorted non-increasing, sums to n.
  std::vector<std::uint32_t> sizes;
};

// Samples n degrees from the power law; resamples whole vectors until the sum
// is even, at most max_iters times, then decrements the largest value once.
DegreeSequence generate_degree_sequence(std::uint64_t n, const PowerLawSpec& spec,
                                        RandomStream& rng, std::uint32_t max_iters = 100);

// Smallest-|E[X] - target_avg| integer lower cutoff for a power law with the
// given upper cutoff, ties broken toward the smaller cutoff. Lets callers
// specify an average degree instead of the minimum one.
std::uint32_t resolve_min_degree(double target_avg, std::uint32_t w_max, double exponent);

// Samples community sizes until their running sum reaches n; keeps the
// attempt with the smallest overshoot across max_iters attempts, then trims
// and cyclically adjusts entries by +-1 (inside [lo, hi]) until the sum is
// exactly n.
CommunitySizes generate_community_sizes(std::uint64_t n, const PowerLawSpec& spec,
                                        RandomStream& rng, std::uint32_t max_iters = 100);

}  // namespace cbgen
