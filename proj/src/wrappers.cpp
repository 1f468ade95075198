#include "vecgames/wrappers/wrappers.hpp"

#include <algorithm>

namespace vecgames {

NormaliseReward::NormaliseReward(std::unique_ptr<Env> env, NormalisationSpec spec)
    : EnvWrapper(std::move(env)), spec_(std::move(spec)) {
  if (spec_.objective_index < 0 || spec_.objective_index >= num_objectives())
    raise(Errc::IndexOutOfRange, "objective index outside [0, d)");
  if (!spec_.agent.empty()) {
    const auto& all = possible_agents();
    if (std::find(all.begin(), all.end(), spec_.agent) == all.end())
      raise(Errc::UnknownAgent, "no agent named " + spec_.agent);
  }
  if (!(spec_.low < spec_.high)) raise(Errc::InvalidLimits, "need low < high");
}

StepOutput NormaliseReward::step(const AgentMap<Action>& actions) {
  StepOutput out = EnvWrapper::step(actions);
  const auto idx = static_cast<std::size_t>(spec_.objective_index);
  const double span = spec_.high - spec_.low;
  for (auto& [agent, reward] : out.rewards) {
    if (!spec_.agent.empty() && agent != spec_.agent) continue;
    reward[idx] = (reward[idx] - spec_.low) / span;
  }
  return out;
}

std::unique_ptr<Env> NormaliseReward::clone() const {
  return std::make_unique<NormaliseReward>(clone_inner(), spec_);
}

std::optional<RewardBounds> NormaliseReward::reward_bounds() const {
  auto bounds = EnvWrapper::reward_bounds();
  if (!bounds || !spec_.agent.empty()) return bounds;
  const auto idx = static_cast<std::size_t>(spec_.objective_index);
  bounds->low[idx] = 0.0;
  bounds->high[idx] = 1.0;
  return bounds;
}

LineariseReward::LineariseReward(std::unique_ptr<Env> env, AgentMap<WeightVector> weights)
    : EnvWrapper(std::move(env)), weights_(std::move(weights)) {
  for (const auto& agent : possible_agents()) {
    auto it = weights_.find(agent);
    if (it == weights_.end())
      raise(Errc::WeightLengthMismatch, "no weight vector for agent " + agent);
    if (static_cast<int>(it->second.size()) != inner().num_objectives())
      raise(Errc::WeightLengthMismatch, "weight length differs from objective count");
  }
}

StepOutput LineariseReward::step(const AgentMap<Action>& actions) {
  StepOutput out = EnvWrapper::step(actions);
  for (auto& [agent, reward] : out.rewards) {
    reward = ObjectiveVector{weights_.at(agent).utility(reward)};
  }
  return out;
}

std::unique_ptr<Env> LineariseReward::clone() const {
  return std::make_unique<LineariseReward>(clone_inner(), weights_);
}

bool LineariseReward::team_reward() const {
  if (!inner().team_reward()) return false;
  const auto& first = weights_.begin()->second;
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const auto& kv) { return kv.second == first; });
}

CentraliseAgent::CentraliseAgent(std::unique_ptr<Env> env, CentraliseMode mode)
    : env_(std::move(env)), mode_(mode) {
  const auto& members = env_->possible_agents();

  std::vector<double> obs_low, obs_high;
  for (const auto& agent : members) {
    const Space& space = env_->observation_space(agent);
    if (space.is_discrete()) {
      obs_low.push_back(0.0);
      obs_high.push_back(static_cast<double>(space.as_discrete().n - 1));
    } else {
      const auto& box = space.as_box();
      obs_low.insert(obs_low.end(), box.low.begin(), box.low.end());
      obs_high.insert(obs_high.end(), box.high.begin(), box.high.end());
    }
  }
  observation_space_ = Space::box(std::move(obs_low), std::move(obs_high));

  const bool all_discrete = std::all_of(members.begin(), members.end(), [&](const AgentId& a) {
    return env_->action_space(a).is_discrete();
  });
  const bool all_box = std::all_of(members.begin(), members.end(), [&](const AgentId& a) {
    return env_->action_space(a).is_box();
  });
  if (all_discrete) {
    discrete_actions_ = true;
    std::int64_t product = 1;
    for (const auto& agent : members) product *= env_->action_space(agent).as_discrete().n;
    action_space_ = Space::discrete(product);
  } else if (all_box) {
    std::vector<double> low, high;
    for (const auto& agent : members) {
      const auto& box = env_->action_space(agent).as_box();
      low.insert(low.end(), box.low.begin(), box.low.end());
      high.insert(high.end(), box.high.begin(), box.high.end());
    }
    action_space_ = Space::box(std::move(low), std::move(high));
  } else {
    raise(Errc::UnsupportedSpace, "cannot centralise mixed discrete/continuous action spaces");
  }
}

const Space& CentraliseAgent::observation_space(const AgentId& agent) const {
  if (agent != self_[0]) raise(Errc::UnknownAgent, "centralised env has one agent");
  return observation_space_;
}

const Space& CentraliseAgent::action_space(const AgentId& agent) const {
  if (agent != self_[0]) raise(Errc::UnknownAgent, "centralised env has one agent");
  return action_space_;
}

Observation CentraliseAgent::merge_observations(const AgentMap<Observation>& observations) const {
  std::vector<double> merged;
  for (const auto& agent : env_->possible_agents()) {
    auto it = observations.find(agent);
    if (it == observations.end()) continue;
    if (const auto* idx = std::get_if<std::int64_t>(&it->second)) {
      merged.push_back(static_cast<double>(*idx));
    } else {
      const auto& vec = std::get<std::vector<double>>(it->second);
      merged.insert(merged.end(), vec.begin(), vec.end());
    }
  }
  return merged;
}

AgentMap<Action> CentraliseAgent::split_action(const Action& joint) const {
  const auto& members = env_->possible_agents();
  AgentMap<Action> split;
  if (discrete_actions_) {
    std::int64_t code = std::get<std::int64_t>(joint);
    // Agent 0 is the most significant digit: peel digits from the right.
    std::vector<std::int64_t> digits(members.size());
    for (std::size_t i = members.size(); i-- > 0;) {
      const std::int64_t n = env_->action_space(members[i]).as_discrete().n;
      digits[i] = code % n;
      code /= n;
    }
    for (std::size_t i = 0; i < members.size(); ++i) split[members[i]] = digits[i];
  } else {
    const auto& flat = std::get<std::vector<double>>(joint);
    std::size_t offset = 0;
    for (const auto& agent : members) {
      const std::size_t len = env_->action_space(agent).as_box().low.size();
      split[agent] =
          std::vector<double>(flat.begin() + static_cast<std::ptrdiff_t>(offset),
                              flat.begin() + static_cast<std::ptrdiff_t>(offset + len));
      offset += len;
    }
  }
  return split;
}

ResetOutput CentraliseAgent::reset(Seed seed) {
  ResetOutput inner = env_->reset(seed);
  active_ = self_;
  ResetOutput out;
  out.observations[self_[0]] = merge_observations(inner.observations);
  Info merged;
  for (const auto& [agent, info] : inner.infos) {
    for (const auto& [key, value] : info) merged[agent + "/" + key] = value;
  }
  out.infos[self_[0]] = std::move(merged);
  return out;
}

StepOutput CentraliseAgent::step(const AgentMap<Action>& actions) {
  if (active_.empty())
    raise(Errc::SteppedTerminalEnv, "step called on a finished centralised episode");
  auto it = actions.find(self_[0]);
  if (it == actions.end()) raise(Errc::MissingAgentAction, "no action for the central agent");
  if (!action_space_.contains(it->second))
    raise(Errc::OutOfSpaceAction, "joint action outside the centralised space");

  AgentMap<Action> split = split_action(it->second);
  // Agents that already finished no longer take part.
  for (auto inner_it = split.begin(); inner_it != split.end();) {
    const auto& live = env_->agents();
    if (std::find(live.begin(), live.end(), inner_it->first) == live.end()) {
      inner_it = split.erase(inner_it);
    } else {
      ++inner_it;
    }
  }

  StepOutput inner = env_->step(split);

  ObjectiveVector reward(static_cast<std::size_t>(env_->num_objectives()), 0.0);
  bool any_termination = false;
  bool any_truncation = false;
  for (const auto& [agent, r] : inner.rewards) {
    reward += r;
    any_termination = any_termination || inner.terminations.at(agent);
    any_truncation = any_truncation || inner.truncations.at(agent);
  }
  if (mode_ == CentraliseMode::Mean && !inner.rewards.empty()) {
    for (double& x : reward) x /= static_cast<double>(inner.rewards.size());
  }

  const bool done = env_->agents().empty();
  StepOutput out;
  out.observations[self_[0]] = merge_observations(inner.observations);
  out.rewards[self_[0]] = std::move(reward);
  out.terminations[self_[0]] = done && any_termination;
  out.truncations[self_[0]] = done && !any_termination && any_truncation;
  Info merged;
  for (const auto& [agent, info] : inner.infos) {
    for (const auto& [key, value] : info) merged[agent + "/" + key] = value;
  }
  out.infos[self_[0]] = std::move(merged);
  if (done) active_.clear();
  return out;
}

std::unique_ptr<Env> CentraliseAgent::clone() const {
  return std::make_unique<CentraliseAgent>(env_->clone(), mode_);
}

}  // namespace vecgames
