#pragma once

#include <cstdint>
#include <vector>

#include "cbgen/random.hpp"
#include "cbgen/sampling.hpp"

namespace cbgen {

struct Assignment;

enum class MixingMode {
  xi_global,  // noise fraction xi applied to every cluster
  mu_global,  // cross-endpoint fraction mu, one xi for the whole graph
  mu_local,   // cross-endpoint fraction mu, per-cluster xi_l
};

struct MixingSpec {
  MixingMode mode = MixingMode::xi_global;
  double value = 0.0;

  bool uses_mu() const { return mode != MixingMode::xi_global; }
  void validate() const;  // throws ConfigError
};

// Per-cluster noise fractions plus the thresholds they were derived from.
struct ResolvedMixing {
  std::vector<double> xi_per_cluster;
  double mu0 = 0.0;  // 1 - sum_l (W_l/W)^2; inter-community edge fraction at xi=1
  double mu1 = 0.0;  // 1 - max_l W_l/W; largest mu the local variant can realize
  double phi = 0.0;  // 1 - sum_l (s_l/n)^2; size-based estimate of mu0
};

// 1 - sum_l (s_l/n)^2.
double compute_phi(const CommunitySizes& sizes);

// Turns the user-facing mixing parameter into per-cluster xi values using the
// realized cluster volumes. phi comes from compute_phi on the matching sizes.
// Throws InfeasibleError when mu exceeds the attainable threshold (mu0
// globally, mu1 locally): such graphs would be denser between communities
// than inside them.
ResolvedMixing resolve_mixing(const MixingSpec& spec, const std::vector<std::uint64_t>& volumes,
                              double phi);

// floor(x) + 1 with probability frac(x), floor(x) otherwise; unbiased.
std::uint64_t randomized_round(double x, RandomStream& rng);

struct WeightSplit {
  std::vector<double> y;  // cluster portion, y_i = (1 - xi_l) w_i
  std::vector<double> z;  // background portion, z_i = w_i - y_i
  // Integer split for the configuration model; empty in real mode.
  std::vector<std::uint32_t> y_int;
  std::vector<std::uint32_t> z_int;
  bool integer_mode = false;
};

// Splits each weight into a cluster portion and a background portion. In
// integer mode non-leaders are rounded randomly and each cluster's leader
// (largest weight, lowest index on ties) absorbs the remainder so the
// cluster's integer sum is even.
WeightSplit split_weights(const DegreeSequence& w, const Assignment& assignment,
                          const ResolvedMixing& mixing, bool integer_mode, RandomStream& rng);

// w_i * (W_l/W + (1 - xi) (W - W_l)/W): expected number of neighbours inside
// the vertex's own cluster.
double expected_internal_degree(double w_i, double xi, double W_l, double W);

}  // namespace cbgen
