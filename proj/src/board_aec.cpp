#include "vecgames/envs/board_aec.hpp"

#include <algorithm>

namespace vecgames {

void BoardAecBase::reset(Seed seed) {
  game_reset(seed);
  cycle_ = names_;
  cursor_ = static_cast<std::size_t>(game_mover());
  accumulated_.assign(names_.size(),
                      ObjectiveVector(static_cast<std::size_t>(num_objectives()), 0.0));
  finished_.assign(names_.size(), false);
}

const AgentId& BoardAecBase::current_agent() const {
  if (cycle_.empty()) raise(Errc::SteppedTerminalEnv, "episode is over");
  return cycle_[cursor_];
}

int BoardAecBase::index_of(const AgentId& agent) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == agent) return static_cast<int>(i);
  }
  raise(Errc::UnknownAgent, "no agent named " + agent);
}

AecView BoardAecBase::last() const {
  const int index = index_of(current_agent());
  AecView view;
  view.observation = game_observe(index);
  view.reward = accumulated_[static_cast<std::size_t>(index)];
  view.terminated = finished_[static_cast<std::size_t>(index)];
  view.truncated = false;
  return view;
}

void BoardAecBase::step(const std::optional<Action>& action) {
  const AgentId agent = current_agent();
  const int index = index_of(agent);

  if (finished_[static_cast<std::size_t>(index)]) {
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

  std::fill(accumulated_[static_cast<std::size_t>(index)].begin(),
            accumulated_[static_cast<std::size_t>(index)].end(), 0.0);
  std::vector<ObjectiveVector> rewards(
      names_.size(), ObjectiveVector(static_cast<std::size_t>(num_objectives()), 0.0));
  game_apply(*action, rewards);
  for (std::size_t i = 0; i < names_.size(); ++i) accumulated_[i] += rewards[i];

  if (game_over()) {
    finished_.assign(names_.size(), true);
    cursor_ = (cursor_ + 1) % cycle_.size();
  } else {
    const AgentId& next = names_[static_cast<std::size_t>(game_mover())];
    const auto it = std::find(cycle_.begin(), cycle_.end(), next);
    cursor_ = static_cast<std::size_t>(it - cycle_.begin());
  }
}

}  // namespace vecgames
