#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vecgames/core/env.hpp"

namespace vecgames {

struct GatherConfig {
  int width = 8;
  int height = 8;
  int n_agents = 2;
  int colours = 3;  // one objective per item colour
  int items_per_colour = 2;
  int horizon = 50;
  bool team_reward = false;
  // When set, the item/agent layout is drawn once from this seed and stays
  // fixed across resets; otherwise each reset(seed) draws a fresh layout.
  std::optional<Seed> layout_seed = Seed{0};
  // Explicit fixture: one row per line, '.' empty, '1'..'9' item colour,
  // 'A', 'B', ... agent start cells. Overrides random placement.
  std::string layout_text;
};

// Grid world where agents gather coloured items; collecting an item pays +1
// on that colour's objective, to the collector (individual) or to everyone
// (team). Agents may share cells; on simultaneous entry the lowest-index
// agent picks the item up.
class ItemGatheringEnv : public EnvBase {
 public:
  explicit ItemGatheringEnv(GatherConfig config);

  std::string id() const override { return "item_gathering"; }
  int num_objectives() const override { return config_.colours; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::uint64_t state_fingerprint() const override;
  bool team_reward() const override { return config_.team_reward; }
  std::optional<RewardBounds> reward_bounds() const override;

  const GatherConfig& config() const { return config_; }
  int item_at(int row, int col) const {  // 0 empty, 1..colours item
    return grid_[static_cast<std::size_t>(row * config_.width + col)];
  }
  int items_remaining() const;
  std::pair<int, int> agent_position(int index) const {
    return {rows_[static_cast<std::size_t>(index)], cols_[static_cast<std::size_t>(index)]};
  }

 private:
  void place_from_text();
  void place_random(Seed seed);
  Observation observe(int index) const;

  GatherConfig config_;
  Space observation_space_;
  Space action_space_;
  std::vector<int> grid_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  int timestep_ = 0;
};

}  // namespace vecgames
