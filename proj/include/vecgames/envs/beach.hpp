#pragma once

#include <vector>

#include "vecgames/core/env.hpp"
#include "vecgames/wrappers/wrappers.hpp"

namespace vecgames {

struct BeachConfig {
  int sections = 5;
  std::vector<double> capacities;  // per section; default fills with `capacity`
  double capacity = 3.0;
  int n_agents = 50;
  int type_a_count = 35;
  int horizon = 5;
  bool team_reward = true;
  // Fixed start distribution: agents with even index start on one section,
  // odd index on the other.
  int start_section_even = 1;
  int start_section_odd = 3;
};

struct SectionRewards {
  std::vector<double> l_cap;  // x_b * exp(-x_b / psi_b)
  std::vector<double> l_mix;  // min(|A_b|,|B_b|) / (|A_b|+|B_b|), 0 when empty
  double g_cap = 0.0;
  double g_mix = 0.0;
};

SectionRewards beach_section_rewards(const std::vector<int>& count_a,
                                     const std::vector<int>& count_b,
                                     const std::vector<double>& capacities);

// Tabular-learner-compatible view: (own section, own type) as one index.
std::int64_t beach_compat_index(int section, int type, int sections);

// Congestion game over beach sections; agents drift left/stay/right each step
// and the two-objective reward (capacity, mixture) is paid on the final step
// only, either per section (individual) or summed over the beach (team).
class BeachEnv : public EnvBase {
 public:
  explicit BeachEnv(BeachConfig config);

  std::string id() const override { return "beach"; }
  int num_objectives() const override { return 2; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::uint64_t state_fingerprint() const override;
  bool team_reward() const override { return config_.team_reward; }
  std::optional<RewardBounds> reward_bounds() const override;

  const BeachConfig& config() const { return config_; }
  int agent_type(int index) const { return index < config_.type_a_count ? 0 : 1; }
  int position_of(int index) const { return positions_[static_cast<std::size_t>(index)]; }

 private:
  Observation observe(int index) const;
  void occupancy(std::vector<int>& count_a, std::vector<int>& count_b) const;

  BeachConfig config_;
  Space observation_space_;
  Space action_space_;
  std::vector<int> positions_;
  int timestep_ = 0;
};

// Observation wrapper reducing the beach view to Discrete(sections * 2).
class BeachCompatObservation : public EnvWrapper {
 public:
  explicit BeachCompatObservation(std::unique_ptr<Env> env);

  const Space& observation_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;

 private:
  Observation compact(const Observation& full) const;

  Space observation_space_;
  int sections_ = 0;
};

}  // namespace vecgames
