#pragma once

#include <map>
#include <string>
#include <vector>

#include "vecgames/concepts/scalarise.hpp"
#include "vecgames/core/env.hpp"

namespace vecgames {

struct IqlConfig {
  double alpha = 0.5;
  double alpha_decay = 1.0;   // multiplicative per episode
  double alpha_min = 0.0;
  double epsilon = 0.05;
  double epsilon_decay = 0.9999;  // multiplicative per episode
  double epsilon_min = 0.0;
  double gamma = 0.9;
  std::int64_t episodes = 1000;
  Seed seed = 0;
};

// Greedy tabular joint policy: per agent, argmax over a Q row (first index on
// ties, action 0 for unseen observations).
struct TabularPolicy {
  std::map<AgentId, std::map<Observation, std::vector<double>>> q;

  std::int64_t greedy_action(const AgentId& agent, const Observation& obs) const;
};

struct IqlResult {
  TabularPolicy policy;
  // Per episode: mean over agents of the scalarised episodic return.
  std::vector<double> curve;
  // Per episode: mean over agents of the vector episodic return.
  std::vector<ObjectiveVector> mean_returns;
  // Per episode: env-reported info metrics, averaged over agents and summed
  // over the episode's steps (e.g. travel_time, g_cap).
  std::vector<std::map<std::string, double>> metrics;
};

// Independent Q-learners, each training on its own linearly scalarised reward
// w_i . r_i with epsilon-greedy exploration. Observations must be tabular and
// actions discrete. Deterministic given the seed.
IqlResult iql_train(Env& env, const AgentMap<WeightVector>& weights, const IqlConfig& config);

}  // namespace vecgames
