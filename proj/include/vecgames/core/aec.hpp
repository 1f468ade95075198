#pragma once

#include <memory>
#include <optional>

#include "vecgames/core/env.hpp"

namespace vecgames {

// Signals for the agent whose turn it is.
struct AecView {
  Observation observation;
  ObjectiveVector reward;  // accumulated since this agent's previous turn
  bool terminated = false;
  bool truncated = false;
  Info info;
};

// Turn-based interaction mode: one agent observes and acts per call. A
// finished agent is visited once more to receive its final signals and must
// then be stepped with an absent action, which removes it.
class AecEnv {
 public:
  virtual ~AecEnv() = default;

  virtual std::string id() const = 0;
  virtual const std::vector<AgentId>& possible_agents() const = 0;
  virtual int num_objectives() const = 0;
  virtual const Space& observation_space(const AgentId& agent) const = 0;
  virtual const Space& action_space(const AgentId& agent) const = 0;

  virtual void reset(Seed seed) = 0;

  // Agents not yet removed from the cycle (finished ones remain until their
  // closing visit).
  virtual const std::vector<AgentId>& agents() const = 0;

  virtual const AgentId& current_agent() const = 0;
  virtual AecView last() const = 0;
  virtual void step(const std::optional<Action>& action) = 0;

  bool episode_over() const { return agents().empty(); }
};

// Exposes a parallel environment through the AEC contract by buffering one
// action per turn and firing the wrapped step once every active agent has
// acted. A full cycle over the active agents is equivalent to one parallel
// step.
class ParallelToAec : public AecEnv {
 public:
  explicit ParallelToAec(std::unique_ptr<Env> env);

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

  void reset(Seed seed) override;
  const std::vector<AgentId>& agents() const override { return cycle_; }
  const AgentId& current_agent() const override;
  AecView last() const override;
  void step(const std::optional<Action>& action) override;

  // Number of times the wrapped parallel environment has stepped.
  int underlying_steps() const { return underlying_steps_; }
  Env& unwrapped() { return *env_; }

 private:
  struct AgentState {
    Observation observation;
    ObjectiveVector accumulated;
    bool terminated = false;
    bool truncated = false;
    Info info;
  };

  void advance_pointer();

  std::unique_ptr<Env> env_;
  std::vector<AgentId> cycle_;       // agents still in the cycle
  std::size_t cursor_ = 0;           // index into cycle_
  AgentMap<AgentState> state_;
  AgentMap<Action> pending_;
  int underlying_steps_ = 0;
};

}  // namespace vecgames
