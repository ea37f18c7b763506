#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cbgen {

enum class Model { chung_lu, config_model };
enum class Variant { global, local };

struct GeneratorConfig {
  std::uint64_t n = 0;

  // Degree law; unused when in_degrees supplies the sequence.
  std::optional<double> gamma;
  std::optional<std::uint32_t> min_degree;
  std::optional<double> avg_degree;  // alternative to min_degree
  std::optional<std::uint32_t> max_degree;

  // Community size law; unused when in_sizes supplies the sequence.
  std::optional<double> beta;
  std::optional<std::uint32_t> min_community;
  std::optional<std::uint32_t> max_community;

  // Exactly one of the two.
  std::optional<double> xi;
  std::optional<double> mu;
  Variant variant = Variant::global;

  std::optional<Model> model;
  std::optional<std::uint64_t> seed;
  std::uint32_t max_iters = 100;
  unsigned threads = 1;
  bool skip_write = false;

  std::string out_edges;
  std::string out_communities;
  std::string out_degrees;   // optional artifact
  std::string out_sizes;     // optional artifact
  std::string in_degrees;    // replaces the degree law
  std::string in_sizes;      // replaces the size law

  // Cross-field checks; throws ConfigError listing every violation found.
  void validate() const;
};

}  // namespace cbgen
