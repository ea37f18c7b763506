#include "cbgen/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cbgen/errors.hpp"

namespace cbgen {

void PowerLawSpec::validate() const {
  if (!(exponent > 1.0))
    throw ConfigError("power law exponent must be > 1, got " + std::to_string(exponent));
  if (lo < 1) throw ConfigError("power law lower cutoff must be positive");
  if (lo > hi)
    throw ConfigError("power law cutoffs out of order: [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

PowerLawTable::PowerLawTable(const PowerLawSpec& spec) : lo_(spec.lo) {
  spec.validate();
  const std::size_t count = spec.hi - spec.lo + 1;
  cdf_.resize(count);
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = static_cast<double>(spec.lo + i);
    const double mass = std::pow(x, -spec.exponent);
    total += mass;
    weighted += x * mass;
    cdf_[i] = total;
  }
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
  mean_ = weighted / total;
}

std::uint32_t PowerLawTable::sample(RandomStream& rng) const {
  const double u = rng.uniform_real();
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  return lo_ + static_cast<std::uint32_t>(it - cdf_.begin());
}

std::uint32_t sample_power_law(const PowerLawSpec& spec, RandomStream& rng) {
  return PowerLawTable(spec).sample(rng);
}

std::uint64_t DegreeSequence::total() const {
  return std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
}

DegreeSequence generate_degree_sequence(std::uint64_t n, const PowerLawSpec& spec,
                                        RandomStream& rng, std::uint32_t max_iters) {
  if (n < 1) throw ConfigError("degree sequence needs n >= 1");
  const PowerLawTable table(spec);

  DegreeSequence out;
  out.weights.resize(n);
  for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      out.weights[i] = table.sample(rng);
      sum += out.weights[i];
    }
    if (sum % 2 == 0) {
      std::sort(out.weights.begin(), out.weights.end(), std::greater<>());
      return out;
    }
  }
  // Still odd after max_iters resamples: decrement the largest value.
  auto largest = std::max_element(out.weights.begin(), out.weights.end());
  *largest -= 1;
  std::sort(out.weights.begin(), out.weights.end(), std::greater<>());
  return out;
}

std::uint32_t resolve_min_degree(double target_avg, std::uint32_t w_max, double exponent) {
  if (w_max < 1) throw ConfigError("max degree must be positive");
  if (target_avg > static_cast<double>(w_max))
    throw ConfigError("average degree " + std::to_string(target_avg) +
                      " is unreachable: it exceeds the max degree " + std::to_string(w_max));
  std::uint32_t best = 1;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::uint32_t m = 1; m <= w_max; ++m) {
    const PowerLawTable table({exponent, m, w_max});
    const double gap = std::abs(table.mean() - target_avg);
    if (gap < best_gap) {  // ties keep the smaller cutoff
      best_gap = gap;
      best = m;
    }
  }
  return best;
}

namespace {

// Drops trailing entries until len * lo <= n, so the sum can be walked down to
// n without pushing entries below the lower cutoff.
void truncate_oversized(std::vector<std::uint32_t>& sizes, std::uint64_t& sum, std::uint64_t n,
                        std::uint32_t lo) {
  while (!sizes.empty() &&
         static_cast<std::uint64_t>(sizes.size()) * lo > n) {
    sum -= sizes.back();
    sizes.pop_back();
  }
}

}  // namespace

CommunitySizes generate_community_sizes(std::uint64_t n, const PowerLawSpec& spec,
                                        RandomStream& rng, std::uint32_t max_iters) {
  spec.validate();
  if (!(spec.lo <= spec.hi && spec.hi <= n))
    throw InfeasibleError("community size range [" + std::to_string(spec.lo) + ", " +
                          std::to_string(spec.hi) + "] does not fit n=" + std::to_string(n));
  const PowerLawTable table(spec);

  std::vector<std::uint32_t> best;
  std::uint64_t best_sum = 0;
  bool have_best = false;
  std::vector<std::uint32_t> attempt;
  for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
    attempt.clear();
    std::uint64_t sum = 0;
    while (sum < n) {
      const std::uint32_t x = table.sample(rng);
      attempt.push_back(x);
      sum += x;
    }
    if (sum == n) {
      std::sort(attempt.begin(), attempt.end(), std::greater<>());
      return {std::move(attempt)};
    }
    if (!have_best || sum < best_sum) {
      best = attempt;
      best_sum = sum;
      have_best = true;
    }
  }

  truncate_oversized(best, best_sum, n, spec.lo);
  const std::uint64_t count = best.size();
  if (count == 0 || count * spec.lo > n || count * spec.hi < n)
    throw InfeasibleError("cannot adjust sampled community sizes to sum to n=" +
                          std::to_string(n) + " within [" + std::to_string(spec.lo) + ", " +
                          std::to_string(spec.hi) + "]");

  // Walk the entries in a random cyclic order, one step at a time, toward n.
  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  for (std::uint64_t i = count; i > 1; --i) {
    const std::uint64_t j = rng.uniform_index(i);
    std::swap(order[i - 1], order[j]);
  }
  std::uint64_t cursor = 0;
  while (best_sum != n) {
    std::uint32_t& value = best[order[cursor]];
    if (best_sum > n && value > spec.lo) {
      --value;
      --best_sum;
    } else if (best_sum < n && value < spec.hi) {
      ++value;
      ++best_sum;
    }
    cursor = (cursor + 1) % count;
  }

  std::sort(best.begin(), best.end(), std::greater<>());
  return {std::move(best)};
}

}  // namespace cbgen
