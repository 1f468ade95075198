#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vecgames/envs/board_aec.hpp"

namespace vecgames {

struct C4Config {
  int width = 7;    // 4..20
  int height = 6;   // 4..20
  bool column_objectives = false;
};

// Immutable board value; row 0 is the bottom.
struct C4State {
  int width = 7;
  int height = 6;
  bool column_objectives = false;
  std::vector<int> cells;  // 0 empty, 1 player 0, 2 player 1
  int mover = 0;
  int moves = 0;
  int outcome = -1;  // -1 ongoing, 0/1 winner, 2 draw

  bool over() const { return outcome != -1; }
  int at(int row, int col) const { return cells[static_cast<std::size_t>(row * width + col)]; }
};

C4State c4_initial(const C4Config& config);

std::vector<int> c4_legal_moves(const C4State& state);

struct C4StepResult {
  C4State state;
  // Present exactly when the move ended the game; one vector per player.
  std::optional<std::array<ObjectiveVector, 2>> terminal_rewards;
};

// Drops the mover's token into `column`. Objective 0 is the win signal (+1 /
// -1 / 0), objective 1 rewards faster wins with (1 - moves/(W*H)) carrying
// the winner's sign, and the optional per-column objectives pay the signed
// token-share difference (own - opponent)/H per column.
C4StepResult c4_step(const C4State& state, int column);

int c4_num_objectives(const C4Config& config);

std::string c4_to_text(const C4State& state);
C4State c4_from_text(const C4Config& config, const std::string& text);

class Connect4Env : public BoardAecBase {
 public:
  explicit Connect4Env(C4Config config);

  std::string id() const override { return "connect4"; }
  const std::vector<AgentId>& possible_agents() const override { return names(); }
  int num_objectives() const override { return c4_num_objectives(config_); }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;

  const C4State& state() const { return state_; }

 protected:
  void game_reset(Seed seed) override;
  bool game_over() const override { return state_.over(); }
  int game_mover() const override { return state_.mover; }
  void game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) override;
  Observation game_observe(int agent_index) const override;

 private:
  C4Config config_;
  C4State state_;
  Space observation_space_;
  Space action_space_;
};

}  // namespace vecgames
