#pragma once

#include <functional>

#include "vecgames/concepts/dominance.hpp"
#include "vecgames/learn/evaluate.hpp"
#include "vecgames/wrappers/wrappers.hpp"

namespace vecgames {

struct StopCriterion {
  std::int64_t episodes = 10000;  // training budget per weight
};

// Trains a greedy joint policy on a scalar-reward (d = 1) environment.
using Learner = std::function<TabularPolicy(Env& scalar_env, const StopCriterion& stop, Seed seed)>;

// Tabular team IQL plugged behind the scalar-env learner contract.
Learner make_iql_learner(IqlConfig base);

struct DecompositionConfig {
  int num_weights = 10;
  StopCriterion stop;
  std::vector<NormalisationSpec> normalisation;  // empty = rewards used as-is
  int eval_episodes = 1;
  bool exact_eval = false;  // use closed-form expectations where available
  Seed seed = 0;
  int threads = 1;  // weight sub-problems may train concurrently
};

// Weighted-sum decomposition over a uniform simplex grid: for every weight,
// normalise and linearise the rewards, train, evaluate the greedy policy on
// the original environment, and archive the value vector if non-dominated.
// The environment must pay a team reward. Results are independent of
// sub-problem completion order.
ParetoArchive decomposition_train(const Env& env, const Learner& learner,
                                  const DecompositionConfig& config);

}  // namespace vecgames
