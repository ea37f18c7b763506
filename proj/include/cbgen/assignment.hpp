#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/mixing.hpp"
#include "cbgen/random.hpp"
#include "cbgen/sampling.hpp"

namespace cbgen {

// Lower bounds on community size per vertex: vertex i may only join a
// community with at least x_i + 1 members. Same order as the weights.
struct BoundVector {
  std::vector<std::uint32_t> x;
};

struct Assignment {
  std::vector<std::uint32_t> community_of;            // vertex -> community index
  std::vector<std::vector<std::uint32_t>> members;    // community -> ascending vertex ids
  std::vector<std::uint64_t> volumes;                 // community -> sum of weights

  std::uint32_t community_count() const { return static_cast<std::uint32_t>(members.size()); }
  std::uint64_t total_volume() const;
};

// x_i = ceil((1 - xi*phi) * w_i) for the xi parameterization and
// x_i = ceil((1 - mu) * w_i) for the mu parameterization: a safe estimate of
// the cluster degree, guarding against vertices that cannot fit anywhere.
BoundVector compute_bounds(const DegreeSequence& w, const CommunitySizes& sizes,
                           const MixingSpec& mixing);

// Places every vertex into a community chosen uniformly over all admissible
// assignments: scanning vertices by non-increasing bound, each picks among
// communities that are large enough (size >= x_i + 1) and still have a free
// spot, with probability proportional to the free spots. Throws
// InfeasibleError when some vertex has no eligible community left.
Assignment assign_communities(const DegreeSequence& w, const BoundVector& bounds,
                              const CommunitySizes& sizes, RandomStream& rng);

}  // namespace cbgen
