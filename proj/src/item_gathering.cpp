#include "vecgames/envs/item_gathering.hpp"

#include <algorithm>
#include <sstream>

namespace vecgames {

ItemGatheringEnv::ItemGatheringEnv(GatherConfig config)
    : config_(std::move(config)), action_space_(Space::discrete(5)) {
  if (config_.width < 2 || config_.height < 2) raise(Errc::InvalidLimits, "grid too small");
  if (config_.n_agents < 1) raise(Errc::InvalidLimits, "need at least 1 agent");
  if (config_.colours < 2 || config_.colours > 9)
    raise(Errc::InvalidLimits, "colour count outside [2, 9]");
  if (config_.horizon < 1) raise(Errc::InvalidLimits, "horizon must be positive");

  // [self index, all agent rows/cols in index order, flattened item grid]
  const std::size_t cells = static_cast<std::size_t>(config_.width * config_.height);
  std::vector<double> low(1 + 2 * static_cast<std::size_t>(config_.n_agents) + cells, 0.0);
  std::vector<double> high = low;
  high[0] = static_cast<double>(config_.n_agents - 1);
  for (int i = 0; i < config_.n_agents; ++i) {
    high[1 + 2 * static_cast<std::size_t>(i)] = static_cast<double>(config_.height - 1);
    high[2 + 2 * static_cast<std::size_t>(i)] = static_cast<double>(config_.width - 1);
  }
  for (std::size_t c = 0; c < cells; ++c)
    high[1 + 2 * static_cast<std::size_t>(config_.n_agents) + c] =
        static_cast<double>(config_.colours);
  observation_space_ = Space::box(std::move(low), std::move(high));

  std::vector<AgentId> names;
  for (int i = 0; i < config_.n_agents; ++i) names.push_back(indexed_agent_name("gatherer_", i, config_.n_agents));
  set_possible_agents(std::move(names));
  grid_.assign(cells, 0);
  rows_.assign(static_cast<std::size_t>(config_.n_agents), 0);
  cols_.assign(static_cast<std::size_t>(config_.n_agents), 0);
}

const Space& ItemGatheringEnv::observation_space(const AgentId&) const {
  return observation_space_;
}
const Space& ItemGatheringEnv::action_space(const AgentId&) const { return action_space_; }

void ItemGatheringEnv::place_from_text() {
  std::istringstream in(config_.layout_text);
  std::string line;
  int row = 0;
  int agents_seen = 0;
  std::fill(grid_.begin(), grid_.end(), 0);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row >= config_.height || static_cast<int>(line.size()) != config_.width)
      raise(Errc::ConfigInvalid, "layout text does not match the grid dimensions");
    for (int col = 0; col < config_.width; ++col) {
      const char c = line[static_cast<std::size_t>(col)];
      if (c == '.') continue;
      if (c >= '1' && c <= '9') {
        const int colour = c - '0';
        if (colour > config_.colours) raise(Errc::ConfigInvalid, "layout colour out of range");
        grid_[static_cast<std::size_t>(row * config_.width + col)] = colour;
      } else if (c >= 'A' && c <= 'Z') {
        const int index = c - 'A';
        if (index >= config_.n_agents) raise(Errc::ConfigInvalid, "layout has too many agents");
        rows_[static_cast<std::size_t>(index)] = row;
        cols_[static_cast<std::size_t>(index)] = col;
        ++agents_seen;
      } else {
        raise(Errc::ConfigInvalid, std::string("unexpected layout character '") + c + "'");
      }
    }
    ++row;
  }
  if (row != config_.height || agents_seen != config_.n_agents)
    raise(Errc::ConfigInvalid, "layout text incomplete");
}

void ItemGatheringEnv::place_random(Seed seed) {
  Rng layout = derive_stream(seed, 0);
  std::fill(grid_.begin(), grid_.end(), 0);
  std::vector<int> cells(grid_.size());
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
  // Draw distinct cells: agents first, then items, so items never spawn
  // underneath an agent.
  const int needed = config_.n_agents + config_.colours * config_.items_per_colour;
  if (needed > static_cast<int>(cells.size()))
    raise(Errc::InvalidLimits, "grid too small for the requested agents and items");
  for (int pick = 0; pick < needed; ++pick) {
    const auto swap_with =
        pick + static_cast<int>(layout.next_int(static_cast<std::int64_t>(cells.size()) - pick));
    std::swap(cells[static_cast<std::size_t>(pick)], cells[static_cast<std::size_t>(swap_with)]);
  }
  for (int i = 0; i < config_.n_agents; ++i) {
    rows_[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)] / config_.width;
    cols_[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)] % config_.width;
  }
  int next = config_.n_agents;
  for (int colour = 1; colour <= config_.colours; ++colour) {
    for (int k = 0; k < config_.items_per_colour; ++k) {
      grid_[static_cast<std::size_t>(cells[static_cast<std::size_t>(next)])] = colour;
      ++next;
    }
  }
}

ResetOutput ItemGatheringEnv::reset(Seed seed) {
  timestep_ = 0;
  if (!config_.layout_text.empty()) {
    place_from_text();
  } else {
    place_random(config_.layout_seed.value_or(seed));
  }
  mark_reset();
  ResetOutput out;
  const auto& all = possible_agents();
  for (int i = 0; i < config_.n_agents; ++i) {
    out.observations[all[static_cast<std::size_t>(i)]] = observe(i);
    out.infos[all[static_cast<std::size_t>(i)]] = Info{};
  }
  return out;
}

Observation ItemGatheringEnv::observe(int index) const {
  std::vector<double> obs;
  obs.reserve(1 + 2 * static_cast<std::size_t>(config_.n_agents) + grid_.size());
  obs.push_back(static_cast<double>(index));
  for (int i = 0; i < config_.n_agents; ++i) {
    obs.push_back(static_cast<double>(rows_[static_cast<std::size_t>(i)]));
    obs.push_back(static_cast<double>(cols_[static_cast<std::size_t>(i)]));
  }
  for (int cell : grid_) obs.push_back(static_cast<double>(cell));
  return obs;
}

int ItemGatheringEnv::items_remaining() const {
  int count = 0;
  for (int cell : grid_) count += cell != 0 ? 1 : 0;
  return count;
}

StepOutput ItemGatheringEnv::step(const AgentMap<Action>& actions) {
  check_actions(actions);
  const auto& all = possible_agents();

  for (int i = 0; i < config_.n_agents; ++i) {
    const auto move = std::get<std::int64_t>(actions.at(all[static_cast<std::size_t>(i)]));
    if (move < 0 || move > 4) raise(Errc::InvalidAction, "gathering actions are 0..4");
    int& row = rows_[static_cast<std::size_t>(i)];
    int& col = cols_[static_cast<std::size_t>(i)];
    switch (move) {
      case 0: row = std::max(0, row - 1); break;           // up
      case 1: row = std::min(config_.height - 1, row + 1); break;  // down
      case 2: col = std::max(0, col - 1); break;           // left
      case 3: col = std::min(config_.width - 1, col + 1); break;   // right
      default: break;                                      // stay
    }
  }

  // Lowest-index agent wins simultaneous pickups.
  std::vector<ObjectiveVector> gained(
      static_cast<std::size_t>(config_.n_agents),
      ObjectiveVector(static_cast<std::size_t>(config_.colours), 0.0));
  for (int i = 0; i < config_.n_agents; ++i) {
    int& cell = grid_[static_cast<std::size_t>(rows_[static_cast<std::size_t>(i)] * config_.width +
                                               cols_[static_cast<std::size_t>(i)])];
    if (cell != 0) {
      gained[static_cast<std::size_t>(i)][static_cast<std::size_t>(cell - 1)] += 1.0;
      cell = 0;
    }
  }

  ++timestep_;
  const bool cleared = items_remaining() == 0;
  const bool out_of_time = timestep_ >= config_.horizon;

  ObjectiveVector team_total(static_cast<std::size_t>(config_.colours), 0.0);
  for (const auto& g : gained) team_total += g;

  StepOutput out;
  for (int i = 0; i < config_.n_agents; ++i) {
    const AgentId& agent = all[static_cast<std::size_t>(i)];
    out.observations[agent] = observe(i);
    out.rewards[agent] = config_.team_reward ? team_total : gained[static_cast<std::size_t>(i)];
    out.terminations[agent] = cleared;
    out.truncations[agent] = !cleared && out_of_time;
    out.infos[agent] = Info{{"items_remaining", static_cast<double>(items_remaining())}};
  }
  if (debug_validation()) validate_output(out);
  retire_finished(out);
  return out;
}

std::unique_ptr<Env> ItemGatheringEnv::clone() const {
  return std::make_unique<ItemGatheringEnv>(*this);
}

std::uint64_t ItemGatheringEnv::state_fingerprint() const {
  Fnv1a hash;
  hash.add(static_cast<std::uint64_t>(timestep_));
  for (int cell : grid_) hash.add(static_cast<std::uint64_t>(cell));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    hash.add(static_cast<std::uint64_t>(rows_[i]));
    hash.add(static_cast<std::uint64_t>(cols_[i]));
  }
  return hash.value;
}

std::optional<RewardBounds> ItemGatheringEnv::reward_bounds() const {
  RewardBounds bounds;
  bounds.low.assign(static_cast<std::size_t>(config_.colours), 0.0);
  bounds.high.assign(static_cast<std::size_t>(config_.colours),
                     static_cast<double>(config_.n_agents));
  return bounds;
}

}  // namespace vecgames
