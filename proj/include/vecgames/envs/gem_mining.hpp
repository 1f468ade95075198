#pragma once

#include <vector>

#include "vecgames/core/env.hpp"

namespace vecgames {

struct GemLimits {
  int min_workers = 1;
  int max_workers = 5;
  int min_connections = 2;
  int max_connections = 4;
};

// One-shot cooperative mining problem. Village i reaches the contiguous mine
// range [i, i + connections_i); the last village always gets the maximum
// connection count, so there are v + max_connections - 1 mines.
struct MiningInstance {
  std::vector<int> workers;           // per village
  std::vector<int> connections;      // per village
  int mine_count = 0;
  std::vector<std::vector<double>> base_probs;  // mine x gem type
  double bonus = 1.03;                // productivity factor per extra worker
  double cap = 0.9;                   // truncation of the per-mine total probability
  int gem_types = 2;

  int first_mine(int village) const { return village; }
};

MiningInstance gem_generate(Seed seed, int villages, int gem_types,
                            GemLimits limits = GemLimits{});

// joint[v] = offset into village v's mine range. Returns the mine x type
// matrix of find probabilities: x * bonus^(w-1) per type, rescaled so the
// per-mine total never exceeds the cap, and all zeros for unstaffed mines.
std::vector<std::vector<double>> gem_probabilities(const MiningInstance& inst,
                                                   const std::vector<int>& joint);

// One mining day: independent per-type Bernoulli draws after rescaling.
ObjectiveVector gem_step(const MiningInstance& inst, const std::vector<int>& joint, Rng& rng);

// Closed-form expectation of gem_step.
ObjectiveVector gem_expected(const MiningInstance& inst, const std::vector<int>& joint);

class GemMiningEnv : public EnvBase, public OneShotExact {
 public:
  explicit GemMiningEnv(MiningInstance instance);

  std::string id() const override { return "gem_mining"; }
  int num_objectives() const override { return instance_.gem_types; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::uint64_t state_fingerprint() const override;
  bool team_reward() const override { return true; }
  bool deterministic() const override { return false; }
  std::optional<RewardBounds> reward_bounds() const override;
  const OneShotExact* one_shot_exact() const override { return this; }

  ObjectiveVector expected_team_return(const AgentMap<Action>& actions) const override;

  const MiningInstance& instance() const { return instance_; }
  std::vector<int> joint_from_actions(const AgentMap<Action>& actions) const;

 private:
  MiningInstance instance_;
  Space observation_space_;
  std::vector<Space> action_spaces_;
  Rng rewards_rng_;
  bool stepped_ = false;
};

}  // namespace vecgames
