#include "vecgames/envs/connect4.hpp"

#include <sstream>

namespace vecgames {

namespace {

void check_config(const C4Config& config) {
  if (config.width < 4 || config.width > 20 || config.height < 4 || config.height > 20)
    raise(Errc::InvalidLimits, "board sides must lie in [4, 20]");
}

// Longest line through (row, col) for the given player, one direction pair.
int line_length(const C4State& s, int row, int col, int dr, int dc, int player) {
  int count = 1;
  for (int sign : {1, -1}) {
    int r = row + sign * dr;
    int c = col + sign * dc;
    while (r >= 0 && r < s.height && c >= 0 && c < s.width && s.at(r, c) == player) {
      ++count;
      r += sign * dr;
      c += sign * dc;
    }
  }
  return count;
}

std::array<ObjectiveVector, 2> terminal_rewards_for(const C4State& s) {
  const int d = 2 + (s.column_objectives ? s.width : 0);
  std::array<ObjectiveVector, 2> rewards{
      ObjectiveVector(static_cast<std::size_t>(d), 0.0),
      ObjectiveVector(static_cast<std::size_t>(d), 0.0)};
  if (s.outcome == 0 || s.outcome == 1) {
    const int winner = s.outcome;
    const double speed =
        1.0 - static_cast<double>(s.moves) / static_cast<double>(s.width * s.height);
    rewards[static_cast<std::size_t>(winner)][0] = 1.0;
    rewards[static_cast<std::size_t>(1 - winner)][0] = -1.0;
    rewards[static_cast<std::size_t>(winner)][1] = speed;
    rewards[static_cast<std::size_t>(1 - winner)][1] = -speed;
  }
  if (s.column_objectives) {
    for (int col = 0; col < s.width; ++col) {
      int own = 0, opp = 0;
      for (int row = 0; row < s.height; ++row) {
        if (s.at(row, col) == 1) ++own;
        if (s.at(row, col) == 2) ++opp;
      }
      const double share = static_cast<double>(own - opp) / static_cast<double>(s.height);
      rewards[0][static_cast<std::size_t>(2 + col)] = share;
      rewards[1][static_cast<std::size_t>(2 + col)] = -share;
    }
  }
  return rewards;
}

}  // namespace

C4State c4_initial(const C4Config& config) {
  check_config(config);
  C4State state;
  state.width = config.width;
  state.height = config.height;
  state.column_objectives = config.column_objectives;
  state.cells.assign(static_cast<std::size_t>(config.width * config.height), 0);
  return state;
}

std::vector<int> c4_legal_moves(const C4State& state) {
  std::vector<int> moves;
  if (state.over()) return moves;
  for (int col = 0; col < state.width; ++col) {
    if (state.at(state.height - 1, col) == 0) moves.push_back(col);
  }
  return moves;
}

C4StepResult c4_step(const C4State& state, int column) {
  if (state.over()) raise(Errc::GameOver, "the game already ended");
  if (column < 0 || column >= state.width) raise(Errc::IllegalMove, "column out of range");
  if (state.at(state.height - 1, column) != 0) raise(Errc::FullColumn, "column is full");

  C4State next = state;
  int row = 0;
  while (next.at(row, column) != 0) ++row;
  const int token = next.mover + 1;
  next.cells[static_cast<std::size_t>(row * next.width + column)] = token;
  ++next.moves;

  const bool won = line_length(next, row, column, 0, 1, token) >= 4 ||
                   line_length(next, row, column, 1, 0, token) >= 4 ||
                   line_length(next, row, column, 1, 1, token) >= 4 ||
                   line_length(next, row, column, 1, -1, token) >= 4;
  if (won) {
    next.outcome = next.mover;
  } else if (next.moves == next.width * next.height) {
    next.outcome = 2;  // draw
  }
  next.mover = 1 - next.mover;

  C4StepResult result{std::move(next), std::nullopt};
  if (result.state.over()) result.terminal_rewards = terminal_rewards_for(result.state);
  return result;
}

int c4_num_objectives(const C4Config& config) {
  return 2 + (config.column_objectives ? config.width : 0);
}

std::string c4_to_text(const C4State& state) {
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

C4State c4_from_text(const C4Config& config, const std::string& text) {
  C4State state = c4_initial(config);
  std::istringstream in(text);
  std::string line;
  int row = config.height - 1;
  int counts[2] = {0, 0};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row < 0 || static_cast<int>(line.size()) != config.width)
      raise(Errc::FileInvalid, "board text does not match the configured size");
    for (int col = 0; col < config.width; ++col) {
      const char c = line[static_cast<std::size_t>(col)];
      if (c == '.') continue;
      if (c != '0' && c != '1') raise(Errc::FileInvalid, "board cells are '.', '0' or '1'");
      state.cells[static_cast<std::size_t>(row * config.width + col)] = c - '0' + 1;
      ++counts[c - '0'];
    }
    --row;
  }
  state.moves = counts[0] + counts[1];
  state.mover = counts[0] > counts[1] ? 1 : 0;
  // Gravity sanity: no empty cell below a token.
  for (int col = 0; col < config.width; ++col) {
    bool gap = false;
    for (int r = 0; r < config.height; ++r) {
      if (state.at(r, col) == 0) gap = true;
      else if (gap) raise(Errc::FileInvalid, "floating token violates gravity");
    }
  }
  return state;
}

Connect4Env::Connect4Env(C4Config config)
    : config_(config),
      state_(c4_initial(config)),
      action_space_(Space::discrete(config.width)) {
  // [mover, cells bottom-up] with cell codes 0/1/2
  std::vector<double> low(1 + static_cast<std::size_t>(config.width * config.height), 0.0);
  std::vector<double> high(low.size(), 2.0);
  high[0] = 1.0;
  observation_space_ = Space::box(std::move(low), std::move(high));
  init_agents({"player_0", "player_1"});
}

const Space& Connect4Env::observation_space(const AgentId&) const { return observation_space_; }
const Space& Connect4Env::action_space(const AgentId&) const { return action_space_; }

void Connect4Env::game_reset(Seed) { state_ = c4_initial(config_); }

void Connect4Env::game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) {
  C4StepResult result = c4_step(state_, static_cast<int>(std::get<std::int64_t>(action)));
  state_ = std::move(result.state);
  if (result.terminal_rewards) {
    rewards[0] = (*result.terminal_rewards)[0];
    rewards[1] = (*result.terminal_rewards)[1];
  }
}

Observation Connect4Env::game_observe(int) const {
  std::vector<double> obs;
  obs.reserve(1 + state_.cells.size());
  obs.push_back(static_cast<double>(state_.mover));
  for (int cell : state_.cells) obs.push_back(static_cast<double>(cell));
  return obs;
}

}  // namespace vecgames
