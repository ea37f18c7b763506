#include "cbgen/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cbgen/errors.hpp"

namespace cbgen {

std::uint64_t Assignment::total_volume() const {
  return std::accumulate(volumes.begin(), volumes.end(), std::uint64_t{0});
}

BoundVector compute_bounds(const DegreeSequence& w, const CommunitySizes& sizes,
                           const MixingSpec& mixing) {
  mixing.validate();
  double keep;
  if (mixing.mode == MixingMode::xi_global) {
    keep = 1.0 - mixing.value * compute_phi(sizes);
  } else {
    keep = 1.0 - mixing.value;
  }
  BoundVector out;
  out.x.resize(w.weights.size());
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    const double v = keep * static_cast<double>(w.weights[i]);
    // Nudge below the product so representation noise on an exact integer
    // (e.g. 0.8 * 10) cannot bump the ceiling up a step.
    out.x[i] = static_cast<std::uint32_t>(std::ceil(v - 1e-9 * std::max(1.0, v)));
  }
  return out;
}

namespace {

// Fenwick tree over per-community free spots; supports point update, prefix
// sum, and descent to the r-th remaining spot in O(log k).
class SpotTree {
 public:
  explicit SpotTree(const std::vector<std::uint32_t>& counts)
      : size_(counts.size()), tree_(counts.size() + 1, 0) {
    for (std::size_t i = 0; i < size_; ++i) tree_[i + 1] = counts[i];
    for (std::size_t i = 1; i <= size_; ++i) {
      const std::size_t parent = i + (i & (~i + 1));
      if (parent <= size_) tree_[parent] += tree_[i];
    }
  }

  void add(std::size_t index, std::int64_t delta) {
    for (std::size_t i = index + 1; i <= size_; i += i & (~i + 1)) {
      tree_[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[i]) + delta);
    }
  }

  std::uint64_t prefix(std::size_t count) const {
    std::uint64_t sum = 0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

  // Smallest index whose prefix sum exceeds r; r < prefix(size).
  std::size_t find(std::uint64_t r) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 <= size_) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step <= size_ && tree_[pos + step] <= r) {
        pos += step;
        r -= tree_[pos];
      }
    }
    return pos;  // 0-based community index
  }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> tree_;
};

}  // namespace

Assignment assign_communities(const DegreeSequence& w, const BoundVector& bounds,
                              const CommunitySizes& sizes, RandomStream& rng) {
  const std::size_t n = w.weights.size();
  const std::size_t k = sizes.sizes.size();
  if (bounds.x.size() != n) throw ConfigError("bounds do not cover the weight sequence");
  if (!std::is_sorted(bounds.x.begin(), bounds.x.end(), std::greater<>()))
    throw ConfigError("bounds must be sorted non-increasing");
  if (!std::is_sorted(sizes.sizes.begin(), sizes.sizes.end(), std::greater<>()))
    throw ConfigError("community sizes must be sorted non-increasing");

  std::uint64_t capacity = 0;
  for (std::uint32_t s : sizes.sizes) capacity += s;
  if (capacity != n) {
    std::ostringstream msg;
    msg << "community sizes sum to " << capacity << " but there are " << n << " vertices";
    throw ConfigError(msg.str());
  }

  Assignment out;
  out.community_of.resize(n);
  out.members.resize(k);
  out.volumes.assign(k, 0);

  SpotTree spots(sizes.sizes);
  std::size_t eligible = 0;  // communities with size >= x_i + 1 form a prefix
  for (std::size_t i = 0; i < n; ++i) {
    while (eligible < k && sizes.sizes[eligible] >= static_cast<std::uint64_t>(bounds.x[i]) + 1)
      ++eligible;
    if (eligible == 0) {
      std::ostringstream msg;
      msg << "no admissible assignment: vertex with weight " << w.weights[i]
          << " needs a community of at least " << bounds.x[i] + 1
          << " members, larger than every community";
      throw InfeasibleError(msg.str());
    }
    const std::uint64_t free_spots = spots.prefix(eligible);
    if (free_spots == 0) {
      std::ostringstream msg;
      msg << "no admissible assignment: all communities large enough for weight " << w.weights[i]
          << " (bound " << bounds.x[i] << ") are already full";
      throw InfeasibleError(msg.str());
    }
    const std::size_t pick = spots.find(rng.uniform_index(free_spots));
    spots.add(pick, -1);
    out.community_of[i] = static_cast<std::uint32_t>(pick);
    out.members[pick].push_back(static_cast<std::uint32_t>(i));
    out.volumes[pick] += w.weights[i];
  }
  return out;
}

}  // namespace cbgen
