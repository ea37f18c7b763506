#include "cbgen/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "cbgen/errors.hpp"
#include "cbgen/random.hpp"
#include "distribution_checks.hpp"

namespace {

using cbgen::ConfigError;
using cbgen::InfeasibleError;
using cbgen::PowerLawSpec;
using cbgen::PowerLawTable;
using cbgen::RandomStream;

PowerLawSpec law(double exponent, std::uint32_t lo, std::uint32_t hi) {
  PowerLawSpec spec;
  spec.exponent = exponent;
  spec.lo = lo;
  spec.hi = hi;
  return spec;
}

TEST(PowerLawSpec, RejectsBadParameters) {
  EXPECT_THROW(law(1.0, 1, 10).validate(), ConfigError);
  EXPECT_THROW(law(0.5, 1, 10).validate(), ConfigError);
  EXPECT_THROW(law(2.0, 0, 10).validate(), ConfigError);
  EXPECT_THROW(law(2.0, 5, 4).validate(), ConfigError);
  EXPECT_NO_THROW(law(1.5, 1, 1).validate());
  EXPECT_NO_THROW(law(2.5, 5, 50).validate());
}

TEST(PowerLawTable, MeanMatchesHandComputedSum) {
  // exponent 2 on {1, 2, 3}: masses 1, 1/4, 1/9.
  const double mass = 1.0 + 1.0 / 4.0 + 1.0 / 9.0;
  const double mean = (1.0 + 2.0 / 4.0 + 3.0 / 9.0) / mass;
  EXPECT_NEAR(PowerLawTable(law(2.0, 1, 3)).mean(), mean, 1e-12);

  // exponent 1.5 on {2, 3}: masses 2^-1.5, 3^-1.5.
  const double m2 = std::pow(2.0, -1.5);
  const double m3 = std::pow(3.0, -1.5);
  EXPECT_NEAR(PowerLawTable(law(1.5, 2, 3)).mean(), (2.0 * m2 + 3.0 * m3) / (m2 + m3), 1e-12);

  EXPECT_NEAR(PowerLawTable(law(3.0, 7, 7)).mean(), 7.0, 1e-12);
}

TEST(PowerLawTable, SamplesMatchExactMassFunction) {
  const auto spec = law(2.5, 5, 50);
  const PowerLawTable table(spec);
  RandomStream rng(20240817);

  std::map<std::uint64_t, std::uint64_t> counts;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    const std::uint32_t x = table.sample(rng);
    ASSERT_GE(x, spec.lo);
    ASSERT_LE(x, spec.hi);
    ++counts[x];
  }
  const auto pmf = checks::power_law_pmf(spec.exponent, spec.lo, spec.hi);
  std::map<std::uint64_t, double> expected;
  for (std::uint32_t x = spec.lo; x <= spec.hi; ++x) expected[x] = pmf[x - spec.lo];
  EXPECT_GT(checks::goodness_of_fit(counts, expected), 0.01);
}

TEST(PowerLawTable, DegenerateRangeAlwaysReturnsLo) {
  const PowerLawTable table(law(2.0, 9, 9));
  RandomStream rng(1);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(table.sample(rng), 9u);
}

TEST(DegreeSequence, SortedEvenAndBounded) {
  const auto spec = law(2.1, 3, 60);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomStream rng(seed);
    const auto degrees = cbgen::generate_degree_sequence(1001, spec, rng);
    ASSERT_EQ(degrees.weights.size(), 1001u);
    EXPECT_EQ(degrees.total() % 2, 0u);
    EXPECT_TRUE(std::is_sorted(degrees.weights.begin(), degrees.weights.end(),
                               std::greater<>()));
    for (std::uint32_t w : degrees.weights) {
      EXPECT_GE(w, spec.lo);
      EXPECT_LE(w, spec.hi);
    }
  }
}

TEST(DegreeSequence, OddSumFallbackDecrementsLargest) {
  // lo == hi == 3 with odd n: every resample sums to 3n, which is odd, so the
  // fallback decrements one entry.
  RandomStream rng(7);
  const auto degrees = cbgen::generate_degree_sequence(5, law(2.0, 3, 3), rng, 4);
  ASSERT_EQ(degrees.weights.size(), 5u);
  EXPECT_EQ(degrees.total(), 14u);
  const std::vector<std::uint32_t> want{3, 3, 3, 3, 2};
  EXPECT_EQ(degrees.weights, want);
}

TEST(ResolveMinDegree, AgreesWithExhaustiveOracle) {
  const double exponent = 2.5;
  const std::uint32_t w_max = 50;
  for (double target : {5.0, 8.2, 10.0, 25.0, 49.5}) {
    std::uint32_t best = 1;
    double best_gap = 1e300;
    for (std::uint32_t m = 1; m <= w_max; ++m) {
      const double gap = std::abs(checks::power_law_mean(exponent, m, w_max) - target);
      if (gap < best_gap) {
        best_gap = gap;
        best = m;
      }
    }
    EXPECT_EQ(cbgen::resolve_min_degree(target, w_max, exponent), best) << "target " << target;
  }
}

TEST(ResolveMinDegree, BoundaryTargets) {
  EXPECT_EQ(cbgen::resolve_min_degree(50.0, 50, 2.5), 50u);
  EXPECT_THROW(cbgen::resolve_min_degree(50.5, 50, 2.5), ConfigError);
  EXPECT_THROW(cbgen::resolve_min_degree(10.0, 0, 2.5), ConfigError);
}

TEST(CommunitySizes, SumToNInsideRange) {
  const auto spec = law(1.5, 50, 500);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomStream rng(seed);
    const auto sizes = cbgen::generate_community_sizes(5000, spec, rng);
    const std::uint64_t total =
        std::accumulate(sizes.sizes.begin(), sizes.sizes.end(), std::uint64_t{0});
    EXPECT_EQ(total, 5000u);
    EXPECT_TRUE(std::is_sorted(sizes.sizes.begin(), sizes.sizes.end(), std::greater<>()));
    for (std::uint32_t s : sizes.sizes) {
      EXPECT_GE(s, spec.lo);
      EXPECT_LE(s, spec.hi);
    }
  }
}

TEST(CommunitySizes, DegenerateEqualSizes) {
  RandomStream rng(3);
  const auto sizes = cbgen::generate_community_sizes(100, law(2.0, 25, 25), rng);
  const std::vector<std::uint32_t> want{25, 25, 25, 25};
  EXPECT_EQ(sizes.sizes, want);
}

TEST(CommunitySizes, ImpossibleInstancesAreRejected) {
  RandomStream rng(3);
  // 25 does not divide 90, and every entry must be exactly 25.
  EXPECT_THROW(cbgen::generate_community_sizes(90, law(2.0, 25, 25), rng), InfeasibleError);
  // The largest community would not fit in the graph.
  EXPECT_THROW(cbgen::generate_community_sizes(100, law(2.0, 10, 200), rng), InfeasibleError);
  // Cutoffs out of order fail parameter validation.
  EXPECT_THROW(cbgen::generate_community_sizes(100, law(2.0, 30, 20), rng), ConfigError);
}

TEST(RandomStream, DerivedStreamsAreStableAndIndependent) {
  RandomStream root(99);
  RandomStream a = root.derive(1);
  RandomStream b = root.derive(2);
  RandomStream a_again = root.derive(1);
  const std::uint64_t first_a = a.next_u64();
  EXPECT_EQ(first_a, a_again.next_u64());
  EXPECT_NE(first_a, b.next_u64());
  // Deriving is a pure function of the seed, not of consumption.
  root.next_u64();
  EXPECT_EQ(root.derive(1).next_u64(), first_a);
}

TEST(RandomStream, UniformIndexCoversRangeUniformly) {
  RandomStream rng(11);
  std::map<std::uint64_t, std::uint64_t> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[rng.uniform_index(6)];
  std::map<std::uint64_t, double> expected;
  for (std::uint64_t v = 0; v < 6; ++v) expected[v] = 1.0 / 6.0;
  EXPECT_GT(checks::goodness_of_fit(counts, expected), 0.01);
}

}  // namespace
