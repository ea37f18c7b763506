#include "cbgen/config_model.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <thread>

#include "cbgen/errors.hpp"

namespace cbgen {

namespace {

constexpr std::uint64_t kBackgroundTag = 1;
constexpr std::uint64_t kClusterTagBase = 16;
constexpr std::uint64_t kBackgroundPassBudget = 10000;

}  // namespace

void PairingStats::absorb(const PairingStats& other) {
  loops += other.loops;
  duplicates += other.duplicates;
  switch_attempts += other.switch_attempts;
  switch_accepts += other.switch_accepts;
  passes += other.passes;
  giveup_pairs += other.giveup_pairs;
}

std::vector<Edge> cm_pairing(const std::vector<std::uint32_t>& ids,
                             const std::vector<std::uint32_t>& degrees, RandomStream& rng) {
  if (ids.size() != degrees.size())
    throw GenerationError("pairing got mismatched ids and degrees");
  std::uint64_t total = 0;
  for (std::uint32_t d : degrees) total += d;
  if (total % 2 != 0) {
    std::ostringstream msg;
    msg << "cannot pair an odd number of points (" << total << ")";
    throw GenerationError(msg.str());
  }

  std::vector<std::uint32_t> points;
  points.reserve(total);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::uint32_t c = 0; c < degrees[i]; ++c) points.push_back(ids[i]);
  }
  for (std::uint64_t t = total; t > 1; --t) {
    const std::uint64_t j = rng.uniform_index(t);
    std::swap(points[t - 1], points[j]);
  }
  std::vector<Edge> pairs;
  pairs.reserve(total / 2);
  for (std::uint64_t p = 0; p < total; p += 2) pairs.push_back(make_edge(points[p], points[p + 1]));
  return pairs;
}

ResolveOutcome resolve_pair_conflicts(std::vector<Edge> pairs, EdgeSet& dup_set,
                                      bool allow_giveup, std::uint64_t max_passes,
                                      RandomStream& rng, PairingStats& stats) {
  ResolveOutcome out;
  out.kept.reserve(pairs.size());
  std::deque<Edge> recycle;
  for (Edge e : pairs) {
    if (is_loop(e)) {
      recycle.push_back(e);
      ++stats.loops;
    } else if (!dup_set.insert(edge_key(e))) {
      recycle.push_back(e);
      ++stats.duplicates;
    } else {
      out.kept.push_back(e);
    }
  }

  const std::uint64_t attempts_per_pass = std::max<std::uint64_t>(pairs.size(), 1);
  std::uint64_t passes = 0;
  while (!recycle.empty()) {
    if (out.kept.empty() && recycle.size() <= 1) {
      // A single bad pair with nothing to switch against can never resolve.
      if (allow_giveup) break;
      throw GenerationError("a conflicting pair has no switching partner");
    }
    if (!allow_giveup && passes >= max_passes) {
      std::ostringstream msg;
      msg << "conflict resolution exceeded its pass budget (" << max_passes << " passes, "
          << recycle.size() << " pairs still unresolved)";
      throw GenerationError(msg.str());
    }

    bool progress = false;
    for (std::uint64_t att = 0; att < attempts_per_pass && !recycle.empty(); ++att) {
      ++stats.switch_attempts;
      Edge bad = recycle.front();
      recycle.pop_front();
      const std::size_t pool = out.kept.size() + recycle.size();
      if (pool == 0) {
        recycle.push_back(bad);
        break;
      }
      const std::uint64_t pick = rng.uniform_index(pool);
      const bool from_kept = pick < out.kept.size();
      const std::size_t ridx = from_kept ? 0 : pick - out.kept.size();
      const Edge partner = from_kept ? out.kept[pick] : recycle[ridx];

      std::uint32_t x = partner.a;
      std::uint32_t y = partner.b;
      if (rng.bernoulli(0.5)) std::swap(x, y);
      const Edge n1 = make_edge(bad.a, x);
      const Edge n2 = make_edge(bad.b, y);
      const bool ok = !is_loop(n1) && !is_loop(n2) && n1 != n2 &&
                      !dup_set.contains(edge_key(n1)) && !dup_set.contains(edge_key(n2));
      if (!ok) {
        recycle.push_back(bad);
        continue;
      }
      if (from_kept) {
        dup_set.erase(edge_key(partner));
        out.kept[pick] = out.kept.back();
        out.kept.pop_back();
      } else {
        recycle[ridx] = recycle.back();
        recycle.pop_back();
      }
      dup_set.insert(edge_key(n1));
      dup_set.insert(edge_key(n2));
      out.kept.push_back(n1);
      out.kept.push_back(n2);
      ++stats.switch_accepts;
      progress = true;
    }
    ++passes;
    ++stats.passes;
    if (!recycle.empty() && !progress && allow_giveup) break;
  }

  if (!recycle.empty()) {
    stats.giveup_pairs += recycle.size();
    out.gave_up.assign(recycle.begin(), recycle.end());
  }
  return out;
}

ResolveOutcome cm_resolve_cluster(std::vector<Edge> pairs, RandomStream& rng,
                                  PairingStats& stats) {
  EdgeSet local(pairs.size());
  return resolve_pair_conflicts(std::move(pairs), local, /*allow_giveup=*/true, 0, rng, stats);
}

EdgeList cm_generate(const WeightSplit& split, const Assignment& assignment, RandomStream& rng,
                     CmRunStats* stats, unsigned threads) {
  if (!split.integer_mode)
    throw GenerationError("configuration model needs the integer weight split");
  const std::size_t k = assignment.members.size();
  const std::size_t n = split.y_int.size();

  std::vector<ResolveOutcome> cluster_out(k);
  std::vector<PairingStats> cluster_stats(k);
  auto run_cluster = [&](std::size_t l) {
    const auto& ids = assignment.members[l];
    if (ids.empty()) return;
    RandomStream local = rng.derive(kClusterTagBase + l);
    std::vector<std::uint32_t> degrees(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j) degrees[j] = split.y_int[ids[j]];
    auto pairs = cm_pairing(ids, degrees, local);
    cluster_out[l] = cm_resolve_cluster(std::move(pairs), local, cluster_stats[l]);
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

  CmRunStats run;
  std::vector<std::uint32_t> background_degree(n);
  for (std::size_t v = 0; v < n; ++v) background_degree[v] = split.z_int[v];
  for (std::size_t l = 0; l < k; ++l) {
    run.clusters.absorb(cluster_stats[l]);
    for (Edge e : cluster_out[l].gave_up) {
      ++background_degree[e.a];
      ++background_degree[e.b];
      run.giveup_degrees += 2;
    }
  }

  EdgeList out;
  const std::uint64_t volume = assignment.total_volume();
  out.edges.reserve(volume / 2);
  out.provenance.reserve(volume / 2);
  EdgeSet occupied(volume / 2);
  for (std::size_t l = 0; l < k; ++l) {
    for (Edge e : cluster_out[l].kept) {
      occupied.insert(edge_key(e));
      out.append(e, static_cast<std::uint32_t>(l) + 1);
    }
    cluster_out[l].kept.clear();
    cluster_out[l].kept.shrink_to_fit();
  }

  std::vector<std::uint32_t> bg_ids;
  std::vector<std::uint32_t> bg_degrees;
  for (std::size_t v = 0; v < n; ++v) {
    if (background_degree[v] > 0) {
      bg_ids.push_back(static_cast<std::uint32_t>(v));
      bg_degrees.push_back(background_degree[v]);
    }
  }
  if (!bg_ids.empty()) {
    RandomStream bg = rng.derive(kBackgroundTag);
    auto pairs = cm_pairing(bg_ids, bg_degrees, bg);
    run.background_pairs = pairs.size();
    auto resolved = resolve_pair_conflicts(std::move(pairs), occupied, /*allow_giveup=*/false,
                                           kBackgroundPassBudget, bg, run.background);
    for (Edge e : resolved.kept) out.append(e, 0);
  }

  // Deviations should be impossible: give-ups reroute degrees, they never
  // drop them. Counted so the run report can prove it.
  std::vector<std::uint32_t> realized(n);
  for (Edge e : out.edges) {
    ++realized[e.a];
    ++realized[e.b];
  }
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t want = split.y_int[v] + split.z_int[v];
    if (realized[v] != want) ++run.degree_deviations;
  }
  if (stats != nullptr) *stats = run;
  return out;
}

}  // namespace cbgen
