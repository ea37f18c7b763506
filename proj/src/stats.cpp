#include "cbgen/stats.hpp"

#include "cbgen/errors.hpp"

namespace cbgen {

double global_mixing(const EdgeList& edges, const Assignment& assignment) {
  if (edges.size() == 0) throw ConfigError("cannot measure mixing on an empty edge list");
  std::uint64_t cross = 0;
  for (Edge e : edges.edges) {
    if (assignment.community_of[e.a] != assignment.community_of[e.b]) ++cross;
  }
  return static_cast<double>(cross) / static_cast<double>(edges.size());
}

std::vector<CommunityStat> community_mixing(const EdgeList& edges, const Assignment& assignment) {
  const std::size_t k = assignment.members.size();
  std::vector<CommunityStat> out(k);
  for (std::size_t l = 0; l < k; ++l) {
    out[l].community = static_cast<std::uint32_t>(l);
    out[l].size = assignment.members[l].size();
  }
  for (Edge e : edges.edges) {
    const std::uint32_t ca = assignment.community_of[e.a];
    const std::uint32_t cb = assignment.community_of[e.b];
    ++out[ca].degree_volume;
    ++out[cb].degree_volume;
    if (ca != cb) {
      ++out[ca].external;
      ++out[cb].external;
    }
  }
  for (auto& stat : out) {
    stat.mu = stat.degree_volume == 0
                  ? 0.0
                  : static_cast<double>(stat.external) / static_cast<double>(stat.degree_volume);
  }
  return out;
}

std::vector<double> expected_mixing_curve(const Assignment& assignment, double xi) {
  const double total = static_cast<double>(assignment.total_volume());
  std::vector<double> out(assignment.volumes.size());
  for (std::size_t l = 0; l < assignment.volumes.size(); ++l) {
    out[l] = xi * (total - static_cast<double>(assignment.volumes[l])) / total;
  }
  return out;
}

}  // namespace cbgen
