#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vecgames/envs/board_aec.hpp"

namespace vecgames {

struct BtConfig {
  int width = 8;    // 3..20
  int height = 8;   // 5..20
  int objectives = 4;  // 1 win, 2 +speed, 3 +captures, 4 +preservation
  int move_cap = 0;    // 0 = default 4 * width * height
};

// Row 0 is player 0's home row; player 0 marches upward.
struct BtState {
  int width = 8;
  int height = 8;
  std::vector<int> cells;  // 0 empty, 1 player 0, 2 player 1
  int mover = 0;
  int moves = 0;
  std::array<int, 2> captures{0, 0};  // opponent pieces taken, per player
  int outcome = -1;                    // -1 ongoing, 0/1 winner, 2 draw

  bool over() const { return outcome != -1; }
  int at(int row, int col) const { return cells[static_cast<std::size_t>(row * width + col)]; }
};

// Moves are encoded as from_cell * 3 + direction with direction 0 straight,
// 1 diagonal toward column-1, 2 diagonal toward column+1 (always forward for
// the mover). Straight moves never capture; diagonal moves may.
struct BtMove {
  int from_row = 0;
  int from_col = 0;
  int direction = 0;

  int encode(int width) const { return (from_row * width + from_col) * 3 + direction; }
  static BtMove decode(int code, int width) {
    BtMove move;
    move.direction = code % 3;
    const int cell = code / 3;
    move.from_row = cell / width;
    move.from_col = cell % width;
    return move;
  }
};

BtState bt_initial(const BtConfig& config);

std::vector<int> bt_legal_moves(const BtState& state);

struct BtStepResult {
  BtState state;
  std::optional<std::array<ObjectiveVector, 2>> terminal_rewards;
  bool captured = false;
};

// Applies an encoded move. Terminal vector per player (up to the configured
// objective count): win +-1, speed (1 - moves/move_cap) with the winner's
// sign, captures taken / (2 * width), and -(own pieces lost) / (2 * width).
BtStepResult bt_step(const BtState& state, int encoded_move, const BtConfig& config);

std::string bt_to_text(const BtState& state);
BtState bt_from_text(const BtConfig& config, const std::string& text);

class BreakthroughEnv : public BoardAecBase {
 public:
  explicit BreakthroughEnv(BtConfig config);

  std::string id() const override { return "breakthrough"; }
  const std::vector<AgentId>& possible_agents() const override { return names(); }
  int num_objectives() const override { return config_.objectives; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;

  const BtState& state() const { return state_; }
  const BtConfig& config() const { return config_; }

 protected:
  void game_reset(Seed seed) override;
  bool game_over() const override { return state_.over(); }
  int game_mover() const override { return state_.mover; }
  void game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) override;
  Observation game_observe(int agent_index) const override;

 private:
  BtConfig config_;
  BtState state_;
  Space observation_space_;
  Space action_space_;
};

}  // namespace vecgames
