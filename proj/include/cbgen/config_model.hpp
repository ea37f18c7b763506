#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/assignment.hpp"
#include "cbgen/edge_set.hpp"
#include "cbgen/mixing.hpp"
#include "cbgen/random.hpp"

namespace cbgen {

struct PairingStats {
  std::uint64_t loops = 0;            // pairs set aside at classification
  std::uint64_t duplicates = 0;
  std::uint64_t switch_attempts = 0;
  std::uint64_t switch_accepts = 0;
  std::uint64_t passes = 0;
  std::uint64_t giveup_pairs = 0;     // pairs whose degrees moved to the background

  void absorb(const PairingStats& other);
};

// Uniform random pairing of degree-many points per vertex, projected to
// edges; loops and duplicates stay in. Throws GenerationError when the
// degree total is odd.
std::vector<Edge> cm_pairing(const std::vector<std::uint32_t>& ids,
                             const std::vector<std::uint32_t>& degrees, RandomStream& rng);

struct ResolveOutcome {
  std::vector<Edge> kept;
  std::vector<Edge> gave_up;  // empty when give-up is off
};

// Splits pairs into simple edges and a recycle queue (loops, duplicates
// against dup_set), then runs switching passes: each attempt pops a bad
// pair, picks a random partner from kept + recycle, and rewires the four
// endpoints with a fair coin choosing the orientation; the rewiring is kept
// only if it creates two new simple edges. Kept edges live in dup_set (which
// may already hold edges that must not be duplicated, e.g. community edges
// when resolving the background). A pass is pairs.size() attempts. With
// allow_giveup, a pass without progress stops and the leftovers are
// returned; otherwise passes continue until max_passes, then
// GenerationError.
ResolveOutcome resolve_pair_conflicts(std::vector<Edge> pairs, EdgeSet& dup_set,
                                      bool allow_giveup, std::uint64_t max_passes,
                                      RandomStream& rng, PairingStats& stats);

// Pairing + conflict resolution for one community; give-up enabled. The
// give-up pairs' endpoints keep their residual degrees for the background.
ResolveOutcome cm_resolve_cluster(std::vector<Edge> pairs, RandomStream& rng,
                                  PairingStats& stats);

struct CmRunStats {
  PairingStats clusters;
  PairingStats background;
  std::uint64_t giveup_degrees = 0;      // degree endpoints rerouted to the background
  std::uint64_t background_pairs = 0;
  std::uint64_t degree_deviations = 0;   // vertices whose final degree differs from w
};

// Configuration-model variant: each community pairs its integer cluster
// portions and resolves conflicts locally (giving up moves residual degrees
// to the background); the background pairs the z portions plus give-ups and
// resolves against the global edge set without giving up. Every vertex ends
// with exactly its weight as degree. One derived stream per community, so
// the result is independent of processing order.
EdgeList cm_generate(const WeightSplit& split, const Assignment& assignment, RandomStream& rng,
                     CmRunStats* stats = nullptr, unsigned threads = 1);

}  // namespace cbgen
