#include <iostream>

#include "CLI11.hpp"
#include "vecgames/cli/commands.hpp"
#include "vecgames/core/errors.hpp"
#include "vecgames/io/config.hpp"

namespace {

int exit_code_for(const vecgames::Error& error) {
  switch (error.code()) {
    case vecgames::Errc::ConfigInvalid:
    case vecgames::Errc::FileInvalid:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vecgames: vector-reward multi-agent games, baselines and indicators"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the available environments");

  auto* run = app.add_subcommand("run", "Run a seeded experiment from a config file");
  vecgames::cli::RunOptions run_options;
  std::int64_t seed_override = -1;
  run->add_option("--config", run_options.config_path, "Experiment config path")->required();
  run->add_option("--seed", seed_override, "Run a single seed instead of the configured list");
  std::string out_override;
  run->add_option("--out", out_override, "Output directory override");

  auto* eval = app.add_subcommand("eval", "Compute indicators for a Pareto front file");
  vecgames::cli::EvalOptions eval_options;
  std::string ref_text;
  eval->add_option("--pf", eval_options.pf_path, "Pareto front file")->required();
  eval->add_option("--ref", ref_text, "Reference point, e.g. \"0,0\"");
  eval->add_option("--weights", eval_options.weight_count,
                   "Weight grid size for the expected utility");

  auto* oracle = app.add_subcommand("oracle", "Write the brute-force Pareto front of a config");
  vecgames::cli::OracleOptions oracle_options;
  int horizon = 0;
  oracle->add_option("--config", oracle_options.config_path, "Experiment config path")->required();
  oracle->add_option("--horizon", horizon, "Open-loop enumeration horizon");
  std::string oracle_out;
  oracle->add_option("--out", oracle_out, "Output file for the front");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit with 2
  }

  try {
    if (app.got_subcommand("list")) return vecgames::cli::run_list(std::cout);
    if (app.got_subcommand("run")) {
      if (seed_override >= 0)
        run_options.seed_override = static_cast<vecgames::Seed>(seed_override);
      if (!out_override.empty()) run_options.out_override = out_override;
      return vecgames::cli::run_experiment(run_options, std::cout);
    }
    if (app.got_subcommand("eval")) {
      if (!ref_text.empty()) eval_options.reference_point = vecgames::parse_double_list(ref_text);
      return vecgames::cli::run_eval(eval_options, std::cout);
    }
    if (app.got_subcommand("oracle")) {
      if (horizon > 0) oracle_options.horizon = horizon;
      if (!oracle_out.empty()) oracle_options.out_path = oracle_out;
      return vecgames::cli::run_oracle(oracle_options, std::cout);
    }
  } catch (const vecgames::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 2;
}
