#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cbgen/config.hpp"
#include "cbgen/errors.hpp"
#include "cbgen/pipeline.hpp"

namespace {

// Applies a key=value file to the subcommand's options. Values given on the
// command line win; unknown keys are errors. Done by hand because CLI11 only
// processes config options attached to the top-level command.
void apply_config_file(CLI::App& cmd, const std::string& path) {
  try {
    const auto items = cmd.get_config_formatter()->from_file(path);
    for (const auto& item : items) {
      if (!item.parents.empty() &&
          !(item.parents.size() == 1 && item.parents.front() == cmd.get_name())) {
        throw cbgen::ConfigError("unknown section '" + item.fullname() + "' in " + path);
      }
      if (item.name == "++" || item.name == "--") continue;  // section open/close markers
      CLI::Option* op = cmd.get_option_no_throw("--" + item.name);
      if (op == nullptr) throw cbgen::ConfigError("unknown option '" + item.name + "' in " + path);
      if (!op->get_configurable())
        throw cbgen::ConfigError("'" + item.name + "' is not allowed in a config file");
      if (!op->empty()) continue;
      if (op->get_expected_min() == 0 && item.inputs.size() <= 1) {
        op->add_result(item.inputs.empty() ? std::string("true") : item.inputs.front());
      } else {
        for (const auto& input : item.inputs) op->add_result(input);
      }
      op->run_callback();
    }
  } catch (const CLI::Error& e) {
    throw cbgen::ConfigError(std::string(e.what()) + " (while reading " + path + ")");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Synthetic benchmark graphs with power-law degrees, power-law community "
               "sizes, and tunable community mixing"};
  app.require_subcommand(1);

  cbgen::GeneratorConfig cfg;
  std::string model_name;
  std::string variant_name = "global";

  auto* gen = app.add_subcommand("generate", "Generate a graph and its ground-truth communities");
  std::string config_path;
  gen->add_option("--config", config_path, "Read options from a key=value file (flags override it)")
      ->configurable(false);
  gen->add_option("--n", cfg.n, "Number of vertices");
  gen->add_option("--gamma", cfg.gamma, "Degree power-law exponent (> 1)");
  gen->add_option("--min-degree", cfg.min_degree, "Smallest degree (alternative: --avg-degree)");
  gen->add_option("--avg-degree", cfg.avg_degree,
                  "Target average degree; picks the min-degree that matches it best");
  gen->add_option("--max-degree", cfg.max_degree, "Largest degree");
  gen->add_option("--beta", cfg.beta, "Community size power-law exponent (> 1)");
  gen->add_option("--min-community", cfg.min_community, "Smallest community size");
  gen->add_option("--max-community", cfg.max_community, "Largest community size");
  gen->add_option("--xi", cfg.xi, "Background fraction of every weight, in [0, 1]");
  gen->add_option("--mu", cfg.mu, "Desired mixing (fraction of cross-community edges), in [0, 1]");
  gen->add_option("--variant", variant_name, "Mixing variant: global or local (local needs --mu)")
      ->check(CLI::IsMember({"global", "local"}));
  gen->add_option("--model", model_name, "Edge model: cl (Chung-Lu) or cm (configuration model)")
      ->check(CLI::IsMember({"cl", "cm"}));
  gen->add_option("--seed", cfg.seed, "RNG seed; omitted = drawn from the system");
  gen->add_option("--max-iters", cfg.max_iters, "Resampling attempts for degree/size sequences");
  gen->add_option("--threads", cfg.threads, "Worker threads for per-community edge building");
  gen->add_flag("--skip-write", cfg.skip_write, "Generate without writing artifact files");
  gen->add_option("--out-edges", cfg.out_edges, "Edge list output (u TAB v, 1-based)");
  gen->add_option("--out-communities", cfg.out_communities,
                  "Community map output (vertex TAB community, 1-based)");
  gen->add_option("--out-degrees", cfg.out_degrees, "Optional degree sequence output");
  gen->add_option("--out-sizes", cfg.out_sizes, "Optional community size output");
  gen->add_option("--in-degrees", cfg.in_degrees,
                  "Degree sequence input (one per line); replaces the degree law");
  gen->add_option("--in-sizes", cfg.in_sizes,
                  "Community size input (one per line); replaces the size law");

  std::string edges_path;
  std::string communities_path;
  std::string output_path;
  std::optional<double> expected_xi;
  auto* val = app.add_subcommand("validate", "Measure the achieved mixing of a graph");
  val->add_option("--edges", edges_path, "Edge list file (u TAB v, 1-based)")->required();
  val->add_option("--communities", communities_path,
                  "Community map file (vertex TAB community, 1-based)")
      ->required();
  val->add_option("--xi", expected_xi, "Add the predicted per-community mixing for this xi");
  val->add_option("--output", output_path, "Write the TSV report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (gen->parsed()) {
    if (!config_path.empty()) apply_config_file(*gen, config_path);
    if (!model_name.empty())
      cfg.model = model_name == "cl" ? cbgen::Model::chung_lu : cbgen::Model::config_model;
    cfg.variant = variant_name == "local" ? cbgen::Variant::local : cbgen::Variant::global;
    cfg.validate();
    cbgen::run_generate(cfg, std::cout);
    return 0;
  }

  if (output_path.empty()) {
    cbgen::run_validate(edges_path, communities_path, expected_xi, std::cout);
  } else {
    std::ofstream out(output_path);
    if (!out) throw cbgen::ConfigError("cannot open " + output_path + " for writing");
    cbgen::run_validate(edges_path, communities_path, expected_xi, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios_base::sync_with_stdio(false);
  try {
    return run(argc, argv);
  } catch (const cbgen::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const cbgen::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const cbgen::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cbgen::GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
