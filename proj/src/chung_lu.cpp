#include "cbgen/chung_lu.hpp"

#include <sstream>
#include <thread>

#include "cbgen/alias_table.hpp"
#include "cbgen/errors.hpp"

namespace cbgen {

std::vector<Edge> cl_sample_edges(const std::vector<std::uint32_t>& ids,
                                  const std::vector<double>& weights, std::uint64_t target_m,
                                  EdgeSet& occupied, RandomStream& rng) {
  std::vector<Edge> out;
  if (target_m == 0) return out;
  out.reserve(target_m);
  if (ids.size() != weights.size())
    throw GenerationError("edge sampling got mismatched ids and weights");
  if (ids.size() < 2)
    throw GenerationError("edge sampling needs at least two candidate vertices");

  const AliasTable alias(weights);
  const std::uint64_t cap = 1000 * target_m;
  std::uint64_t rejections = 0;
  while (out.size() < target_m) {
    const std::uint32_t u = ids[alias.sample(rng)];
    const std::uint32_t v = ids[alias.sample(rng)];
    if (u != v) {
      const Edge e = make_edge(u, v);
      if (occupied.insert(edge_key(e))) {
        out.push_back(e);
        rejections = 0;
        continue;
      }
    }
    if (++rejections > cap) {
      std::ostringstream msg;
      msg << "edge sampling stalled after " << rejections << " consecutive rejections ("
          << out.size() << " of " << target_m
          << " edges placed); the weight pool is too concentrated for a simple graph";
      throw GenerationError(msg.str());
    }
  }
  return out;
}

namespace {

constexpr std::uint64_t kBackgroundTag = 1;
constexpr std::uint64_t kClusterTagBase = 16;

double sum_over(const std::vector<std::uint32_t>& ids, const std::vector<double>& values) {
  double total = 0.0;
  for (std::uint32_t v : ids) total += values[v];
  return total;
}

}  // namespace

EdgeList cl_generate(const WeightSplit& split, const Assignment& assignment, RandomStream& rng,
                     unsigned threads) {
  const std::size_t k = assignment.members.size();
  std::vector<std::vector<Edge>> cluster_edges(k);

  // Each community draws from its own derived stream, so any processing
  // order (or thread count) yields the same graph.
  auto run_cluster = [&](std::size_t l) {
    RandomStream local = rng.derive(kClusterTagBase + l);
    const auto& ids = assignment.members[l];
    if (ids.empty()) return;
    std::vector<double> weights(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j) weights[j] = split.y[ids[j]];
    const std::uint64_t target = randomized_round(0.5 * sum_over(ids, split.y), local);
    if (target == 0) return;
    EdgeSet local_set(target);
    cluster_edges[l] = cl_sample_edges(ids, weights, target, local_set, local);
  };

  if (threads <= 1 || k <= 1) {
    for (std::size_t l = 0; l < k; ++l) run_cluster(l);
  } else {
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(k));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t l = t; l < k; l += workers) run_cluster(l);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::uint64_t total_weight = assignment.total_volume();
  std::uint64_t cluster_total = 0;
  for (const auto& edges : cluster_edges) cluster_total += edges.size();

  RandomStream background = rng.derive(kBackgroundTag);
  const std::uint64_t half_total = (total_weight % 2 == 0)
                                       ? total_weight / 2
                                       : randomized_round(0.5 * static_cast<double>(total_weight),
                                                          background);
  if (cluster_total > half_total) {
    std::ostringstream msg;
    msg << "community edge targets (" << cluster_total << ") exceed the total edge budget ("
        << half_total << "); the background graph would need a negative edge count";
    throw GenerationError(msg.str());
  }
  const std::uint64_t background_target = half_total - cluster_total;

  EdgeList out;
  out.edges.reserve(half_total);
  out.provenance.reserve(half_total);
  EdgeSet occupied(half_total);
  for (std::size_t l = 0; l < k; ++l) {
    for (Edge e : cluster_edges[l]) {
      occupied.insert(edge_key(e));
      out.append(e, static_cast<std::uint32_t>(l) + 1);
    }
  }

  if (background_target > 0) {
    std::vector<std::uint32_t> ids;
    std::vector<double> weights;
    ids.reserve(split.z.size());
    weights.reserve(split.z.size());
    for (std::size_t v = 0; v < split.z.size(); ++v) {
      if (split.z[v] > 0.0) {
        ids.push_back(static_cast<std::uint32_t>(v));
        weights.push_back(split.z[v]);
      }
    }
    for (Edge e : cl_sample_edges(ids, weights, background_target, occupied, background))
      out.append(e, 0);
  }
  return out;
}

}  // namespace cbgen
