#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/assignment.hpp"
#include "cbgen/edge_set.hpp"

namespace cbgen {

// Fraction of edges whose endpoints sit in different communities. Throws
// ConfigError on an empty edge list.
double global_mixing(const EdgeList& edges, const Assignment& assignment);

struct CommunityStat {
  std::uint32_t community = 0;   // 0-based index
  std::uint64_t size = 0;        // member count
  std::uint64_t degree_volume = 0;  // sum of realized degrees over members
  std::uint64_t external = 0;    // edge endpoints leaving the community
  double mu = 0.0;               // external / degree_volume; 0 when volume is 0
};

// Per-community mixing on realized degrees. The degree-volume weighted
// average of the mu values equals the global mixing exactly.
std::vector<CommunityStat> community_mixing(const EdgeList& edges, const Assignment& assignment);

// Predicted per-community mixing xi * (W - W_l) / W from the assignment's
// weight volumes; index l holds community l's prediction.
std::vector<double> expected_mixing_curve(const Assignment& assignment, double xi);

}  // namespace cbgen
