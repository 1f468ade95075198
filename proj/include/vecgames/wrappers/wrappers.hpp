#pragma once

#include <memory>

#include "vecgames/concepts/scalarise.hpp"
#include "vecgames/core/env.hpp"

namespace vecgames {

// Affine rescaling of one immediate reward component of one agent onto
// [0, 1], using known per-step bounds.
struct NormalisationSpec {
  AgentId agent;  // empty = apply to every agent
  int objective_index = 0;
  double low = 0.0;
  double high = 1.0;
};

// Forwards everything to the wrapped environment; subclasses override the
// pieces they transform. Dynamics are never altered.
class EnvWrapper : public Env {
 public:
  explicit EnvWrapper(std::unique_ptr<Env> env) : env_(std::move(env)) {}

  std::string id() const override { return env_->id(); }
  const std::vector<AgentId>& possible_agents() const override {
    return env_->possible_agents();
  }
  int num_objectives() const override { return env_->num_objectives(); }
  const Space& observation_space(const AgentId& agent) const override {
    return env_->observation_space(agent);
  }
  const Space& action_space(const AgentId& agent) const override {
    return env_->action_space(agent);
  }
  const std::vector<AgentId>& agents() const override { return env_->agents(); }
  ResetOutput reset(Seed seed) override { return env_->reset(seed); }
  StepOutput step(const AgentMap<Action>& actions) override { return env_->step(actions); }
  std::uint64_t state_fingerprint() const override { return env_->state_fingerprint(); }
  bool team_reward() const override { return env_->team_reward(); }
  bool deterministic() const override { return env_->deterministic(); }
  std::optional<RewardBounds> reward_bounds() const override { return env_->reward_bounds(); }
  const OneShotExact* one_shot_exact() const override { return env_->one_shot_exact(); }

 protected:
  Env& inner() { return *env_; }
  const Env& inner() const { return *env_; }
  std::unique_ptr<Env> clone_inner() const { return env_->clone(); }

 private:
  std::unique_ptr<Env> env_;
};

class NormaliseReward : public EnvWrapper {
 public:
  NormaliseReward(std::unique_ptr<Env> env, NormalisationSpec spec);

  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::optional<RewardBounds> reward_bounds() const override;

 private:
  NormalisationSpec spec_;
};

// Scalarises each agent's reward vector to the length-1 vector (w_i . r_i);
// the environment becomes single-objective, dynamics unchanged.
class LineariseReward : public EnvWrapper {
 public:
  LineariseReward(std::unique_ptr<Env> env, AgentMap<WeightVector> weights);

  int num_objectives() const override { return 1; }
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::optional<RewardBounds> reward_bounds() const override { return std::nullopt; }
  bool team_reward() const override;

 private:
  AgentMap<WeightVector> weights_;
};

enum class CentraliseMode { Sum, Mean };

// Compresses the multi-agent dimension into one centralised agent: joint
// observation tuple, joint action space (Cartesian product), and the
// component-wise Sum or Mean of the per-agent reward vectors. The reward
// stays a d-vector.
class CentraliseAgent : public Env {
 public:
  CentraliseAgent(std::unique_ptr<Env> env, CentraliseMode mode);

  std::string id() const override { return env_->id() + "/centralised"; }
  const std::vector<AgentId>& possible_agents() const override { return self_; }
  const std::vector<AgentId>& agents() const override { return active_; }
  int num_objectives() const override { return env_->num_objectives(); }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::uint64_t state_fingerprint() const override { return env_->state_fingerprint(); }
  bool team_reward() const override { return true; }  // single agent
  bool deterministic() const override { return env_->deterministic(); }

  // Joint discrete actions use a mixed-radix encoding with agent 0 as the
  // most significant digit.
  AgentMap<Action> split_action(const Action& joint) const;
  Observation merge_observations(const AgentMap<Observation>& observations) const;

 private:
  std::unique_ptr<Env> env_;
  CentraliseMode mode_;
  std::vector<AgentId> self_{"central"};
  std::vector<AgentId> active_;
  Space observation_space_;
  Space action_space_;
  bool discrete_actions_ = false;
};

}  // namespace vecgames
