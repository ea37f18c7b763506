#include "cbgen/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "cbgen/chung_lu.hpp"
#include "cbgen/errors.hpp"
#include "cbgen/io.hpp"
#include "cbgen/stats.hpp"

namespace cbgen {

namespace {

constexpr std::uint64_t kTagDegrees = 1;
constexpr std::uint64_t kTagSizes = 2;
constexpr std::uint64_t kTagAssign = 3;
constexpr std::uint64_t kTagSplit = 4;
constexpr std::uint64_t kTagEdges = 5;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  return out;
}

DegreeSequence load_degrees(const GeneratorConfig& config) {
  auto in = open_input(config.in_degrees);
  auto values = read_sequence(in, config.in_degrees);
  if (values.size() != config.n) {
    std::ostringstream msg;
    msg << config.in_degrees << " holds " << values.size() << " degrees but n = " << config.n;
    throw ConfigError(msg.str());
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  if (!values.empty() && values.back() == 0)
    throw ConfigError(config.in_degrees + ": degrees must be at least 1");
  std::uint64_t total = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
  if (total % 2 != 0)
    throw InfeasibleError(config.in_degrees + ": degree sum is odd and cannot be paired");
  return DegreeSequence{std::move(values)};
}

CommunitySizes load_sizes(const GeneratorConfig& config) {
  auto in = open_input(config.in_sizes);
  auto values = read_sequence(in, config.in_sizes);
  std::sort(values.begin(), values.end(), std::greater<>());
  if (!values.empty() && values.back() == 0)
    throw ConfigError(config.in_sizes + ": community sizes must be at least 1");
  const std::uint64_t total = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
  if (total != config.n) {
    std::ostringstream msg;
    msg << config.in_sizes << ": sizes sum to " << total << " but n = " << config.n;
    throw InfeasibleError(msg.str());
  }
  return CommunitySizes{std::move(values)};
}

MixingSpec mixing_spec_of(const GeneratorConfig& config) {
  MixingSpec spec;
  if (config.xi) {
    spec.mode = MixingMode::xi_global;
    spec.value = *config.xi;
  } else {
    spec.mode = config.variant == Variant::local ? MixingMode::mu_local : MixingMode::mu_global;
    spec.value = *config.mu;
  }
  return spec;
}

}  // namespace

GenerationResult generate_graph(const GeneratorConfig& config) {
  config.validate();
  GenerationResult result;
  auto& report = result.report;
  report.seed = config.seed ? *config.seed : std::random_device{}();
  report.n = config.n;
  RandomStream root(report.seed);

  const auto t_sample = std::chrono::steady_clock::now();
  if (!config.in_degrees.empty()) {
    result.degrees = load_degrees(config);
  } else {
    PowerLawSpec law;
    law.exponent = *config.gamma;
    law.hi = *config.max_degree;
    law.lo = config.min_degree ? *config.min_degree
                               : resolve_min_degree(*config.avg_degree, *config.max_degree,
                                                    *config.gamma);
    RandomStream stream = root.derive(kTagDegrees);
    result.degrees = generate_degree_sequence(config.n, law, stream, config.max_iters);
  }
  if (!config.in_sizes.empty()) {
    result.sizes = load_sizes(config);
  } else {
    PowerLawSpec law;
    law.exponent = *config.beta;
    law.lo = *config.min_community;
    law.hi = *config.max_community;
    RandomStream stream = root.derive(kTagSizes);
    result.sizes = generate_community_sizes(config.n, law, stream, config.max_iters);
  }
  report.timings.sample = seconds_since(t_sample);

  const auto t_assign = std::chrono::steady_clock::now();
  const MixingSpec mixing_spec = mixing_spec_of(config);
  result.bounds = compute_bounds(result.degrees, result.sizes, mixing_spec);
  {
    RandomStream stream = root.derive(kTagAssign);
    result.assignment = assign_communities(result.degrees, result.bounds, result.sizes, stream);
  }
  report.timings.assign = seconds_since(t_assign);

  const auto t_resolve = std::chrono::steady_clock::now();
  result.mixing =
      resolve_mixing(mixing_spec, result.assignment.volumes, compute_phi(result.sizes));
  const bool integer_mode = *config.model == Model::config_model;
  {
    RandomStream stream = root.derive(kTagSplit);
    result.split =
        split_weights(result.degrees, result.assignment, result.mixing, integer_mode, stream);
  }
  report.timings.resolve = seconds_since(t_resolve);

  const auto t_edges = std::chrono::steady_clock::now();
  {
    RandomStream stream = root.derive(kTagEdges);
    if (integer_mode) {
      result.edges =
          cm_generate(result.split, result.assignment, stream, &report.cm, config.threads);
      report.used_cm = true;
    } else {
      result.edges = cl_generate(result.split, result.assignment, stream, config.threads);
    }
  }
  report.timings.edges = seconds_since(t_edges);

  report.communities = result.assignment.members.size();
  report.edge_count = result.edges.size();
  report.phi = result.mixing.phi;
  report.mu0 = result.mixing.mu0;
  report.mu1 = result.mixing.mu1;
  const auto [lo, hi] = std::minmax_element(result.mixing.xi_per_cluster.begin(),
                                            result.mixing.xi_per_cluster.end());
  report.xi_min = *lo;
  report.xi_max = *hi;
  report.realized_mixing =
      report.edge_count == 0 ? 0.0 : global_mixing(result.edges, result.assignment);
  return result;
}

namespace {

void print_report(const RunReport& report, std::ostream& log) {
  const auto flags = log.flags();
  const auto precision = log.precision();
  log << "seed:             " << report.seed << '\n'
      << "vertices:         " << report.n << '\n'
      << "communities:      " << report.communities << '\n'
      << "edges:            " << report.edge_count << '\n';
  log << std::setprecision(6)
      << "phi:              " << report.phi << '\n'
      << "mu0:              " << report.mu0 << '\n'
      << "mu1:              " << report.mu1 << '\n';
  if (report.xi_min == report.xi_max) {
    log << "xi:               " << report.xi_min << '\n';
  } else {
    log << "xi:               [" << report.xi_min << ", " << report.xi_max << "]\n";
  }
  log << "achieved mixing:  " << report.realized_mixing << '\n';
  if (report.used_cm) {
    const auto& cm = report.cm;
    log << "pairing fixes:    loops=" << cm.clusters.loops + cm.background.loops
        << " duplicates=" << cm.clusters.duplicates + cm.background.duplicates
        << " switchings=" << cm.clusters.switch_accepts + cm.background.switch_accepts
        << " giveup-pairs=" << cm.clusters.giveup_pairs
        << " giveup-degrees=" << cm.giveup_degrees << '\n'
        << "degree deviations: " << cm.degree_deviations << '\n';
  }
  log << std::setprecision(3)
      << "timings (s):      sample=" << report.timings.sample
      << " assign=" << report.timings.assign
      << " resolve=" << report.timings.resolve
      << " edges=" << report.timings.edges
      << " write=" << report.timings.write << '\n';
  log.flags(flags);
  log.precision(precision);
}

}  // namespace

RunReport run_generate(const GeneratorConfig& config, std::ostream& log) {
  GenerationResult result = generate_graph(config);
  const auto t_write = std::chrono::steady_clock::now();
  if (!config.skip_write) {
    {
      auto out = open_output(config.out_edges);
      write_edge_list(result.edges, out);
    }
    {
      auto out = open_output(config.out_communities);
      write_partition(result.assignment, out);
    }
    if (!config.out_degrees.empty()) {
      auto out = open_output(config.out_degrees);
      write_sequence(result.degrees.weights, out);
    }
    if (!config.out_sizes.empty()) {
      auto out = open_output(config.out_sizes);
      write_sequence(result.sizes.sizes, out);
    }
  }
  result.report.timings.write = seconds_since(t_write);
  print_report(result.report, log);
  return result.report;
}

void run_validate(const std::string& edges_path, const std::string& communities_path,
                  std::optional<double> xi, std::ostream& out) {
  EdgeList edges;
  {
    auto in = open_input(edges_path);
    edges = read_edge_list(in, edges_path);
  }
  Assignment assignment;
  {
    auto in = open_input(communities_path);
    assignment = read_partition(in, communities_path);
  }
  const std::uint64_t n = assignment.community_of.size();
  for (Edge e : edges.edges) {
    if (e.b >= n) {
      std::ostringstream msg;
      msg << edges_path << " references vertex " << (e.b + 1) << " but " << communities_path
          << " covers only " << n << " vertices";
      throw ParseError(msg.str());
    }
  }

  const double global = global_mixing(edges, assignment);
  const auto per_community = community_mixing(edges, assignment);
  std::vector<double> expected;
  if (xi) {
    // Prediction from realized degree volumes: the same curve the generator
    // targets, evaluated on what the graph actually got.
    Assignment weighted = assignment;
    for (std::size_t l = 0; l < per_community.size(); ++l)
      weighted.volumes[l] = per_community[l].degree_volume;
    expected = expected_mixing_curve(weighted, *xi);
  }

  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(6);
  out << "# edges: " << edges.size() << '\n'
      << "# vertices: " << n << '\n'
      << "# communities: " << per_community.size() << '\n'
      << "# global-mixing: " << global << '\n';
  out << "community\tsize\tvolume\tmu";
  if (xi) out << "\texpected";
  out << '\n';
  for (const auto& stat : per_community) {
    out << (stat.community + 1) << '\t' << stat.size << '\t' << stat.degree_volume << '\t'
        << stat.mu;
    if (xi) out << '\t' << expected[stat.community];
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace cbgen
