#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cbgen/assignment.hpp"
#include "cbgen/config.hpp"
#include "cbgen/config_model.hpp"
#include "cbgen/edge_set.hpp"
#include "cbgen/mixing.hpp"
#include "cbgen/sampling.hpp"

namespace cbgen {

struct PhaseTimings {
  double sample = 0.0;   // degree + size sampling
  double assign = 0.0;   // bounds + community assignment
  double resolve = 0.0;  // mixing resolution + weight split
  double edges = 0.0;
  double write = 0.0;    // filled by run_generate
};

struct RunReport {
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::uint64_t communities = 0;
  std::uint64_t edge_count = 0;
  double phi = 0.0;
  double mu0 = 0.0;
  double mu1 = 0.0;
  double xi_min = 0.0;
  double xi_max = 0.0;
  double realized_mixing = 0.0;
  bool used_cm = false;
  CmRunStats cm;  // zeros for Chung-Lu
  PhaseTimings timings;
};

struct GenerationResult {
  DegreeSequence degrees;
  CommunitySizes sizes;
  BoundVector bounds;
  Assignment assignment;
  ResolvedMixing mixing;
  WeightSplit split;
  EdgeList edges;
  RunReport report;
};

// The whole pipeline, no file output: sample sequences (or take them from
// the in-* files), assign communities, resolve mixing, split weights, build
// edges. The config must pass validate(). Vertex ids are in non-increasing
// degree order.
GenerationResult generate_graph(const GeneratorConfig& config);

// generate_graph plus artifact files and a human-readable report on log.
RunReport run_generate(const GeneratorConfig& config, std::ostream& log);

// Reads a generated graph back and reports achieved mixing: summary lines
// (prefixed '#') and one TSV row per community; with xi the table gains the
// predicted mixing column.
void run_validate(const std::string& edges_path, const std::string& communities_path,
                  std::optional<double> xi, std::ostream& out);

}  // namespace cbgen
