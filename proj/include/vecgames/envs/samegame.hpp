#pragma once

#include <string>
#include <vector>

#include "vecgames/envs/board_aec.hpp"

namespace vecgames {

struct SgConfig {
  int width = 15;    // 3..30
  int height = 15;   // 3..30
  int colours = 5;   // 2..10
  int agents = 1;    // 1..5
  bool team_reward = false;
  bool colour_objectives = true;  // false: single accumulated objective
};

// Row 0 is the bottom; gravity pulls tiles down and empty columns compact to
// the left, so non-empty columns always form a prefix.
struct SgState {
  int width = 15;
  int height = 15;
  int colours = 5;
  int agents = 1;
  bool team_reward = false;
  bool colour_objectives = true;
  std::vector<int> cells;  // 0 empty, 1..colours
  int mover = 0;
  int moves = 0;
  bool finished = false;
  std::vector<ObjectiveVector> scores;  // cumulative per agent

  int at(int row, int col) const { return cells[static_cast<std::size_t>(row * width + col)]; }
  int objectives() const { return colour_objectives ? colours : 1; }
};

SgState sg_initial(const SgConfig& config, Seed seed);

// Representatives (lowest cell index) of every same-colour 4-neighbour group
// of size >= 2.
std::vector<int> sg_legal_moves(const SgState& state);

struct SgStepResult {
  SgState state;
  std::vector<ObjectiveVector> rewards;  // per agent
  int removed = 0;
};

// Removes the group containing `cell` (given as row * width + col), applies
// gravity and column compaction, and pays the mover (team mode: everyone)
// n^2 points on the removed colour's objective.
SgStepResult sg_step(const SgState& state, int cell);

std::string sg_to_text(const SgState& state);
SgState sg_from_text(const SgConfig& config, const std::string& text);

class SameGameEnv : public BoardAecBase {
 public:
  explicit SameGameEnv(SgConfig config);

  std::string id() const override { return "samegame"; }
  const std::vector<AgentId>& possible_agents() const override { return names(); }
  int num_objectives() const override { return config_.colour_objectives ? config_.colours : 1; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;

  const SgState& state() const { return state_; }

 protected:
  void game_reset(Seed seed) override;
  bool game_over() const override { return state_.finished; }
  int game_mover() const override { return state_.mover; }
  void game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) override;
  Observation game_observe(int agent_index) const override;

 private:
  SgConfig config_;
  SgState state_;
  Space observation_space_;
  Space action_space_;
};

}  // namespace vecgames
