#include "cbgen/mixing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "cbgen/assignment.hpp"
#include "cbgen/errors.hpp"

namespace cbgen {

void MixingSpec::validate() const {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << (uses_mu() ? "mu" : "xi") << " must lie in [0, 1], got " << value;
    throw ConfigError(msg.str());
  }
}

double compute_phi(const CommunitySizes& sizes) {
  double n = 0.0;
  for (std::uint32_t s : sizes.sizes) n += static_cast<double>(s);
  if (n <= 0.0) throw ConfigError("community sizes are empty");
  double sum_sq = 0.0;
  for (std::uint32_t s : sizes.sizes) {
    const double f = static_cast<double>(s) / n;
    sum_sq += f * f;
  }
  return 1.0 - sum_sq;
}

ResolvedMixing resolve_mixing(const MixingSpec& spec, const std::vector<std::uint64_t>& volumes,
                              double phi) {
  spec.validate();
  if (volumes.empty()) throw ConfigError("cluster volumes are empty");

  double total = 0.0;
  double max_volume = 0.0;
  for (std::uint64_t v : volumes) {
    total += static_cast<double>(v);
    max_volume = std::max(max_volume, static_cast<double>(v));
  }
  if (total <= 0.0) throw ConfigError("total volume is zero");

  ResolvedMixing out;
  out.phi = phi;
  double sum_sq = 0.0;
  for (std::uint64_t v : volumes) {
    const double f = static_cast<double>(v) / total;
    sum_sq += f * f;
  }
  out.mu0 = 1.0 - sum_sq;
  out.mu1 = 1.0 - max_volume / total;
  out.xi_per_cluster.resize(volumes.size());

  switch (spec.mode) {
    case MixingMode::xi_global: {
      std::fill(out.xi_per_cluster.begin(), out.xi_per_cluster.end(), spec.value);
      break;
    }
    case MixingMode::mu_global: {
      if (spec.value > out.mu0) {
        std::ostringstream msg;
        msg << "mu = " << spec.value << " exceeds mu0 = " << out.mu0
            << "; communities would be sparser inside than between (anti-community regime)";
        throw InfeasibleError(msg.str());
      }
      const double xi = spec.value == 0.0 ? 0.0 : spec.value / out.mu0;
      std::fill(out.xi_per_cluster.begin(), out.xi_per_cluster.end(), xi);
      break;
    }
    case MixingMode::mu_local: {
      if (spec.value > out.mu1) {
        std::ostringstream msg;
        msg << "mu = " << spec.value << " exceeds mu1 = " << out.mu1
            << "; the largest community cannot reach that mixing (anti-community regime)";
        throw InfeasibleError(msg.str());
      }
      for (std::size_t l = 0; l < volumes.size(); ++l) {
        const double rest = total - static_cast<double>(volumes[l]);
        out.xi_per_cluster[l] = spec.value == 0.0 ? 0.0 : spec.value * total / rest;
      }
      break;
    }
  }
  return out;
}

std::uint64_t randomized_round(double x, RandomStream& rng) {
  assert(x >= 0.0);
  const double fl = std::floor(x);
  const double frac = x - fl;
  auto base = static_cast<std::uint64_t>(fl);
  if (frac <= 0.0) return base;
  return base + (rng.uniform_real() < frac ? 1 : 0);
}

namespace {

// Chooses the leader's integer cluster portion: same parity as the
// non-leaders' sum (so the cluster is pairable), within [0, w_leader]. When
// the natural rounding has the wrong parity both neighbours are tried; if
// both stay in range a fair coin decides.
std::uint64_t round_leader(double y, std::uint64_t w, bool want_odd, RandomStream& rng) {
  const double fl = std::floor(y);
  const double frac = y - fl;
  const auto lo = static_cast<std::uint64_t>(fl);
  if (frac > 0.0) {
    // Non-integral: exactly one of floor/ceil has the right parity, and
    // ceil(y) <= w because y <= w.
    const std::uint64_t pick = ((lo & 1) == static_cast<std::uint64_t>(want_odd)) ? lo : lo + 1;
    if (pick > w) {
      std::ostringstream msg;
      msg << "leader rounding out of range: need " << pick << " of weight " << w;
      throw GenerationError(msg.str());
    }
    return pick;
  }
  if ((lo & 1) == static_cast<std::uint64_t>(want_odd)) return lo;
  const bool can_down = lo >= 1;
  const bool can_up = lo + 1 <= w;
  if (can_down && can_up) return rng.bernoulli(0.5) ? lo + 1 : lo - 1;
  if (can_down) return lo - 1;
  if (can_up) return lo + 1;
  std::ostringstream msg;
  msg << "cannot fix cluster parity: leader portion " << lo << " of weight " << w
      << " has no valid neighbour";
  throw GenerationError(msg.str());
}

}  // namespace

WeightSplit split_weights(const DegreeSequence& w, const Assignment& assignment,
                          const ResolvedMixing& mixing, bool integer_mode, RandomStream& rng) {
  const std::size_t n = w.weights.size();
  if (assignment.community_of.size() != n)
    throw ConfigError("assignment does not cover the weight sequence");
  if (mixing.xi_per_cluster.size() != assignment.members.size())
    throw ConfigError("mixing was resolved for a different community count");

  WeightSplit out;
  out.y.resize(n);
  out.z.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = mixing.xi_per_cluster[assignment.community_of[i]];
    out.y[i] = (1.0 - xi) * static_cast<double>(w.weights[i]);
    out.z[i] = static_cast<double>(w.weights[i]) - out.y[i];
  }
  if (!integer_mode) return out;

  out.integer_mode = true;
  out.y_int.resize(n);
  out.z_int.resize(n);
  for (const auto& members : assignment.members) {
    if (members.empty()) continue;
    std::uint32_t leader = members.front();
    for (std::uint32_t v : members) {
      if (w.weights[v] > w.weights[leader]) leader = v;
    }
    std::uint64_t parity = 0;
    for (std::uint32_t v : members) {
      if (v == leader) continue;
      const std::uint64_t rounded = randomized_round(out.y[v], rng);
      out.y_int[v] = static_cast<std::uint32_t>(rounded);
      parity ^= rounded & 1;
    }
    const std::uint64_t picked = round_leader(out.y[leader], w.weights[leader], parity != 0, rng);
    out.y_int[leader] = static_cast<std::uint32_t>(picked);
    for (std::uint32_t v : members) out.z_int[v] = w.weights[v] - out.y_int[v];
  }
  return out;
}

double expected_internal_degree(double w_i, double xi, double W_l, double W) {
  return w_i * (W_l / W + (1.0 - xi) * (W - W_l) / W);
}

}  // namespace cbgen
