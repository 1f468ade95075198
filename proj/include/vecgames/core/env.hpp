#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vecgames/core/errors.hpp"
#include "vecgames/core/rng.hpp"
#include "vecgames/core/space.hpp"
#include "vecgames/core/types.hpp"

namespace vecgames {

// Known per-step reward bounds, used to configure reward normalisation.
struct RewardBounds {
  std::vector<double> low;   // one entry per objective
  std::vector<double> high;
};

// Interface for exactly-evaluable one-shot environments: the expected team
// reward vector of a joint action is available in closed form.
class OneShotExact {
 public:
  virtual ~OneShotExact() = default;
  virtual ObjectiveVector expected_team_return(const AgentMap<Action>& actions) const = 0;
};

// Simultaneous-move vector-reward environment. One instance is single
// threaded; distinct instances share no mutable state.
class Env {
 public:
  virtual ~Env() = default;

  virtual std::string id() const = 0;
  virtual const std::vector<AgentId>& possible_agents() const = 0;
  virtual int num_objectives() const = 0;
  virtual const Space& observation_space(const AgentId& agent) const = 0;
  virtual const Space& action_space(const AgentId& agent) const = 0;

  // Agents still active (not terminated/truncated). Full list after reset.
  virtual const std::vector<AgentId>& agents() const = 0;

  virtual ResetOutput reset(Seed seed) = 0;
  virtual StepOutput step(const AgentMap<Action>& actions) = 0;

  virtual std::unique_ptr<Env> clone() const = 0;

  // Hash of the internal dynamic state; reward wrappers must not change it.
  virtual std::uint64_t state_fingerprint() const = 0;

  // All agents receive one shared reward vector each step.
  virtual bool team_reward() const { return false; }

  // Transitions and rewards are deterministic given (config, seed, actions).
  virtual bool deterministic() const { return true; }

  virtual std::optional<RewardBounds> reward_bounds() const { return std::nullopt; }

  // Closed-form expectations for one-shot environments, when available.
  virtual const OneShotExact* one_shot_exact() const { return nullptr; }

  // When enabled, observations and rewards are validated on every step.
  void set_debug_validation(bool on) { debug_validation_ = on; }
  bool debug_validation() const { return debug_validation_; }

 private:
  bool debug_validation_ = false;
};

// Shared bookkeeping for concrete environments: active-agent management,
// terminal guard and debug validation of step outputs.
class EnvBase : public Env {
 public:
  const std::vector<AgentId>& possible_agents() const override { return possible_agents_; }
  const std::vector<AgentId>& agents() const override { return active_agents_; }

 protected:
  void set_possible_agents(std::vector<AgentId> agents) {
    possible_agents_ = std::move(agents);
    active_agents_ = possible_agents_;
  }

  void mark_reset() { active_agents_ = possible_agents_; }

  // Validates the key set and per-agent action membership, throws otherwise.
  void check_actions(const AgentMap<Action>& actions) const;

  // Drops agents flagged terminated or truncated from the active set.
  void retire_finished(const StepOutput& out);

  // Debug-mode validation of a full StepOutput (spaces, reward length, keys).
  void validate_output(const StepOutput& out) const;

  void require_not_terminal() const {
    if (active_agents_.empty())
      raise(Errc::SteppedTerminalEnv, "step called on an environment with no active agents");
  }

 private:
  std::vector<AgentId> possible_agents_;
  std::vector<AgentId> active_agents_;
};

// "tourist_07": zero-padded so that name order equals index order.
std::string indexed_agent_name(const char* prefix, int index, int count);

// FNV-1a helper for state fingerprints.
struct Fnv1a {
  std::uint64_t value = 0xcbf29ce484222325ULL;
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      value ^= (x >> (8 * i)) & 0xff;
      value *= 0x100000001b3ULL;
    }
  }
  void add(double x);
  void add(const std::vector<double>& xs) {
    for (double x : xs) add(x);
  }
};

}  // namespace vecgames
