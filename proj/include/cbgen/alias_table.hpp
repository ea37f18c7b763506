#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/errors.hpp"
#include "cbgen/random.hpp"

namespace cbgen {

// Walker alias method: O(n) build, O(1) draw of an index with probability
// proportional to its weight. Zero-weight entries are never returned.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& weights)
      : prob_(weights.size()), alias_(weights.size()) {
    const std::size_t n = weights.size();
    if (n == 0) throw GenerationError("alias table needs at least one weight");
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw GenerationError("alias table weights must be non-negative");
      total += w;
    }
    if (total <= 0.0) throw GenerationError("alias table weights sum to zero");

    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i)
      scaled[i] = weights[i] * static_cast<double>(n) / total;

    std::vector<std::uint32_t> small;
    std::vector<std::uint32_t> large;
    small.reserve(n);
    large.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
      const std::uint32_t s = small.back();
      small.pop_back();
      const std::uint32_t l = large.back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    // Rounding leftovers on either queue are probability-1 columns.
    for (std::uint32_t i : large) {
      prob_[i] = 1.0;
      alias_[i] = i;
    }
    for (std::uint32_t i : small) {
      prob_[i] = 1.0;
      alias_[i] = i;
    }
  }

  std::uint32_t sample(RandomStream& rng) const {
    const auto column = static_cast<std::uint32_t>(rng.uniform_index(prob_.size()));
    return rng.uniform_real() < prob_[column] ? column : alias_[column];
  }

  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace cbgen
