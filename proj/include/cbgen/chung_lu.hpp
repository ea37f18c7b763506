#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/assignment.hpp"
#include "cbgen/edge_set.hpp"
#include "cbgen/mixing.hpp"
#include "cbgen/random.hpp"

namespace cbgen {

// Draws exactly target_m distinct simple edges on ids, each endpoint picked
// with probability proportional to its weight, rejecting loops and edges
// already in occupied. Accepted edges are added to occupied and returned.
// Throws GenerationError after 1000 * target_m consecutive rejections.
std::vector<Edge> cl_sample_edges(const std::vector<std::uint32_t>& ids,
                                  const std::vector<double>& weights, std::uint64_t target_m,
                                  EdgeSet& occupied, RandomStream& rng);

// Chung-Lu variant: every community gets round(sum y / 2) edges sampled from
// its members' cluster portions, then the background graph tops the total up
// to round(sum w / 2) using the z portions over all vertices. Edge targets
// use one derived stream per community so the result is independent of
// processing order.
EdgeList cl_generate(const WeightSplit& split, const Assignment& assignment, RandomStream& rng,
                     unsigned threads = 1);

}  // namespace cbgen
