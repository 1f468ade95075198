#include "vecgames/envs/breakthrough.hpp"

#include <sstream>

namespace vecgames {

namespace {

void check_config(const BtConfig& config) {
  if (config.width < 3 || config.width > 20) raise(Errc::InvalidLimits, "width must lie in [3, 20]");
  if (config.height < 5 || config.height > 20)
    raise(Errc::InvalidLimits, "height must lie in [5, 20]");
  if (config.objectives < 1 || config.objectives > 4)
    raise(Errc::InvalidLimits, "objective count must lie in [1, 4]");
}

int effective_move_cap(const BtConfig& config) {
  return config.move_cap > 0 ? config.move_cap : 4 * config.width * config.height;
}

int forward(int player) { return player == 0 ? 1 : -1; }

bool decode_target(const BtState& s, const BtMove& move, int& to_row, int& to_col) {
  const int dc = move.direction == 0 ? 0 : (move.direction == 1 ? -1 : 1);
  to_row = move.from_row + forward(s.mover);
  to_col = move.from_col + dc;
  return to_row >= 0 && to_row < s.height && to_col >= 0 && to_col < s.width;
}

bool move_is_legal(const BtState& s, const BtMove& move) {
  if (move.from_row < 0 || move.from_row >= s.height || move.from_col < 0 ||
      move.from_col >= s.width || move.direction < 0 || move.direction > 2)
    return false;
  if (s.at(move.from_row, move.from_col) != s.mover + 1) return false;
  int to_row = 0, to_col = 0;
  if (!decode_target(s, move, to_row, to_col)) return false;
  const int target = s.at(to_row, to_col);
  if (move.direction == 0) return target == 0;            // straight never captures
  return target != s.mover + 1;                            // diagonal: empty or capture
}

std::array<ObjectiveVector, 2> terminal_rewards_for(const BtState& s, const BtConfig& config) {
  const auto d = static_cast<std::size_t>(config.objectives);
  std::array<ObjectiveVector, 2> rewards{ObjectiveVector(d, 0.0), ObjectiveVector(d, 0.0)};
  const double piece_scale = 2.0 * static_cast<double>(s.width);
  if (s.outcome == 0 || s.outcome == 1) {
    const auto winner = static_cast<std::size_t>(s.outcome);
    rewards[winner][0] = 1.0;
    rewards[1 - winner][0] = -1.0;
    if (config.objectives >= 2) {
      const double speed =
          1.0 - static_cast<double>(s.moves) / static_cast<double>(effective_move_cap(config));
      rewards[winner][1] = speed;
      rewards[1 - winner][1] = -speed;
    }
  }
  for (std::size_t p = 0; p < 2; ++p) {
    if (config.objectives >= 3) rewards[p][2] = s.captures[p] / piece_scale;
    if (config.objectives >= 4) rewards[p][3] = -(s.captures[1 - p]) / piece_scale;
  }
  return rewards;
}

}  // namespace

BtState bt_initial(const BtConfig& config) {
  check_config(config);
  BtState state;
  state.width = config.width;
  state.height = config.height;
  state.cells.assign(static_cast<std::size_t>(config.width * config.height), 0);
  for (int col = 0; col < config.width; ++col) {
    state.cells[static_cast<std::size_t>(0 * config.width + col)] = 1;
    state.cells[static_cast<std::size_t>(1 * config.width + col)] = 1;
    state.cells[static_cast<std::size_t>((config.height - 1) * config.width + col)] = 2;
    state.cells[static_cast<std::size_t>((config.height - 2) * config.width + col)] = 2;
  }
  return state;
}

std::vector<int> bt_legal_moves(const BtState& state) {
  std::vector<int> moves;
  if (state.over()) return moves;
  for (int row = 0; row < state.height; ++row) {
    for (int col = 0; col < state.width; ++col) {
      if (state.at(row, col) != state.mover + 1) continue;
      for (int dir = 0; dir < 3; ++dir) {
        const BtMove move{row, col, dir};
        if (move_is_legal(state, move)) moves.push_back(move.encode(state.width));
      }
    }
  }
  return moves;
}

BtStepResult bt_step(const BtState& state, int encoded_move, const BtConfig& config) {
  if (state.over()) raise(Errc::GameOver, "the game already ended");
  const BtMove move = BtMove::decode(encoded_move, state.width);
  if (!move_is_legal(state, move)) raise(Errc::IllegalMove, "move violates the movement rules");

  BtState next = state;
  int to_row = 0, to_col = 0;
  decode_target(next, move, to_row, to_col);
  const int mover_token = next.mover + 1;
  const bool capture = next.at(to_row, to_col) != 0;
  if (capture) next.captures[static_cast<std::size_t>(next.mover)] += 1;
  next.cells[static_cast<std::size_t>(move.from_row * next.width + move.from_col)] = 0;
  next.cells[static_cast<std::size_t>(to_row * next.width + to_col)] = mover_token;
  ++next.moves;

  const int home_of_opponent = next.mover == 0 ? next.height - 1 : 0;
  bool opponent_wiped = true;
  for (int cell : next.cells) {
    if (cell == 2 - next.mover) {
      opponent_wiped = false;
      break;
    }
  }
  if (to_row == home_of_opponent || opponent_wiped) {
    next.outcome = next.mover;
  } else if (next.moves >= effective_move_cap(config)) {
    next.outcome = 2;
  }
  next.mover = 1 - next.mover;
  if (!next.over() && bt_legal_moves(next).empty()) {
    next.outcome = 1 - next.mover;  // stalled player loses
  }

  BtStepResult result{std::move(next), std::nullopt, capture};
  if (result.state.over()) result.terminal_rewards = terminal_rewards_for(result.state, config);
  return result;
}

std::string bt_to_text(const BtState& state) {
  std::ostringstream out;
  for (int row = state.height - 1; row >= 0; --row) {
    for (int col = 0; col < state.width; ++col) {
      const int cell = state.at(row, col);
      out << (cell == 0 ? '.' : static_cast<char>('0' + cell - 1));
    }
    out << '\n';
  }
  return out.str();
}

BtState bt_from_text(const BtConfig& config, const std::string& text) {
  BtState state = bt_initial(config);
  std::fill(state.cells.begin(), state.cells.end(), 0);
  std::istringstream in(text);
  std::string line;
  int row = config.height - 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row < 0 || static_cast<int>(line.size()) != config.width)
      raise(Errc::FileInvalid, "board text does not match the configured size");
    for (int col = 0; col < config.width; ++col) {
      const char c = line[static_cast<std::size_t>(col)];
      if (c == '.') continue;
      if (c != '0' && c != '1') raise(Errc::FileInvalid, "board cells are '.', '0' or '1'");
      state.cells[static_cast<std::size_t>(row * config.width + col)] = c - '0' + 1;
    }
    --row;
  }
  return state;
}

BreakthroughEnv::BreakthroughEnv(BtConfig config)
    : config_(config),
      state_(bt_initial(config)),
      action_space_(Space::discrete(static_cast<std::int64_t>(config.width) * config.height * 3)) {
  std::vector<double> low(1 + static_cast<std::size_t>(config.width * config.height), 0.0);
  std::vector<double> high(low.size(), 2.0);
  high[0] = 1.0;
  observation_space_ = Space::box(std::move(low), std::move(high));
  init_agents({"player_0", "player_1"});
}

const Space& BreakthroughEnv::observation_space(const AgentId&) const {
  return observation_space_;
}
const Space& BreakthroughEnv::action_space(const AgentId&) const { return action_space_; }

void BreakthroughEnv::game_reset(Seed) { state_ = bt_initial(config_); }

void BreakthroughEnv::game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) {
  BtStepResult result =
      bt_step(state_, static_cast<int>(std::get<std::int64_t>(action)), config_);
  state_ = std::move(result.state);
  if (result.terminal_rewards) {
    rewards[0] = (*result.terminal_rewards)[0];
    rewards[1] = (*result.terminal_rewards)[1];
  }
}

Observation BreakthroughEnv::game_observe(int) const {
  std::vector<double> obs;
  obs.reserve(1 + state_.cells.size());
  obs.push_back(static_cast<double>(state_.mover));
  for (int cell : state_.cells) obs.push_back(static_cast<double>(cell));
  return obs;
}

}  // namespace vecgames
