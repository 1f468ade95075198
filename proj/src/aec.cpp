#include "vecgames/core/aec.hpp"

#include <algorithm>

namespace vecgames {

ParallelToAec::ParallelToAec(std::unique_ptr<Env> env) : env_(std::move(env)) {}

void ParallelToAec::reset(Seed seed) {
  ResetOutput out = env_->reset(seed);
  cycle_ = env_->possible_agents();
  cursor_ = 0;
  state_.clear();
  pending_.clear();
  underlying_steps_ = 0;
  const ObjectiveVector zero(static_cast<std::size_t>(env_->num_objectives()), 0.0);
  for (const auto& agent : cycle_) {
    AgentState s;
    s.observation = out.observations.at(agent);
    s.accumulated = zero;
    s.info = out.infos.at(agent);
    state_[agent] = std::move(s);
  }
}

const AgentId& ParallelToAec::current_agent() const {
  if (cycle_.empty()) raise(Errc::SteppedTerminalEnv, "episode is over");
  return cycle_[cursor_];
}

AecView ParallelToAec::last() const {
  const AgentState& s = state_.at(current_agent());
  return AecView{s.observation, s.accumulated, s.terminated, s.truncated, s.info};
}

void ParallelToAec::advance_pointer() {
  if (!cycle_.empty()) cursor_ = (cursor_ + 1) % cycle_.size();
}

void ParallelToAec::step(const std::optional<Action>& action) {
  const AgentId agent = current_agent();
  AgentState& s = state_.at(agent);

  if (s.terminated || s.truncated) {
    if (action.has_value())
      raise(Errc::ActionGivenForTerminatedAgent,
            "agent " + agent + " is finished, pass an absent action");
    cycle_.erase(cycle_.begin() + static_cast<std::ptrdiff_t>(cursor_));
    if (cursor_ >= cycle_.size()) cursor_ = 0;
    return;
  }

  if (!action.has_value())
    raise(Errc::MissingAgentAction, "agent " + agent + " is active and must act");
  if (!action_space(agent).contains(*action))
    raise(Errc::OutOfSpaceAction, "action outside the space of agent " + agent);

  pending_[agent] = *action;
  std::fill(s.accumulated.begin(), s.accumulated.end(), 0.0);  // its turn happened
  advance_pointer();

  if (pending_.size() == env_->agents().size()) {
    StepOutput out = env_->step(pending_);
    pending_.clear();
    ++underlying_steps_;
    for (const auto& [id, obs] : out.observations) {
      AgentState& t = state_.at(id);
      t.observation = obs;
      t.accumulated += out.rewards.at(id);
      t.terminated = out.terminations.at(id);
      t.truncated = out.truncations.at(id);
      t.info = out.infos.at(id);
    }
  }
}

}  // namespace vecgames
