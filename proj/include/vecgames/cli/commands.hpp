#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "vecgames/core/types.hpp"

namespace vecgames::cli {

struct RunOptions {
  std::string config_path;
  std::optional<Seed> seed_override;
  std::optional<std::string> out_override;
};

struct EvalOptions {
  std::string pf_path;
  std::optional<ObjectiveVector> reference_point;
  int weight_count = 101;
};

struct OracleOptions {
  std::string config_path;
  std::optional<int> horizon;
  std::optional<std::string> out_path;
};

// All commands return 0 and signal problems through vecgames::Error; the
// binary maps ConfigInvalid/FileInvalid to exit code 2 and the rest to 1.
int run_list(std::ostream& out);
int run_experiment(const RunOptions& options, std::ostream& log);
int run_eval(const EvalOptions& options, std::ostream& out);
int run_oracle(const OracleOptions& options, std::ostream& log);

}  // namespace vecgames::cli
