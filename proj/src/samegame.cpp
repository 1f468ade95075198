#include "vecgames/envs/samegame.hpp"

#include <algorithm>
#include <sstream>

namespace vecgames {

namespace {

void check_config(const SgConfig& config) {
  if (config.width < 3 || config.width > 30 || config.height < 3 || config.height > 30)
    raise(Errc::InvalidLimits, "board sides must lie in [3, 30]");
  if (config.colours < 2 || config.colours > 10)
    raise(Errc::InvalidLimits, "colour count must lie in [2, 10]");
  if (config.agents < 1 || config.agents > 5)
    raise(Errc::InvalidLimits, "agent count must lie in [1, 5]");
}

// Flood fill over the 4-neighbourhood; returns the member cell indices.
std::vector<int> group_of(const SgState& s, int start) {
  const int colour = s.cells[static_cast<std::size_t>(start)];
  std::vector<int> members;
  if (colour == 0) return members;
  std::vector<char> seen(s.cells.size(), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    const int cell = stack.back();
    stack.pop_back();
    members.push_back(cell);
    const int row = cell / s.width;
    const int col = cell % s.width;
    const int neighbours[4][2] = {{row - 1, col}, {row + 1, col}, {row, col - 1}, {row, col + 1}};
    for (const auto& n : neighbours) {
      if (n[0] < 0 || n[0] >= s.height || n[1] < 0 || n[1] >= s.width) continue;
      const int idx = n[0] * s.width + n[1];
      if (!seen[static_cast<std::size_t>(idx)] &&
          s.cells[static_cast<std::size_t>(idx)] == colour) {
        seen[static_cast<std::size_t>(idx)] = 1;
        stack.push_back(idx);
      }
    }
  }
  return members;
}

bool any_group_left(const SgState& s) {
  for (int row = 0; row < s.height; ++row) {
    for (int col = 0; col < s.width; ++col) {
      const int colour = s.at(row, col);
      if (colour == 0) continue;
      if (col + 1 < s.width && s.at(row, col + 1) == colour) return true;
      if (row + 1 < s.height && s.at(row + 1, col) == colour) return true;
    }
  }
  return false;
}

void settle(SgState& s) {
  // Gravity within each column.
  for (int col = 0; col < s.width; ++col) {
    int write = 0;
    for (int row = 0; row < s.height; ++row) {
      const int colour = s.at(row, col);
      if (colour != 0) {
        s.cells[static_cast<std::size_t>(row * s.width + col)] = 0;
        s.cells[static_cast<std::size_t>(write * s.width + col)] = colour;
        ++write;
      }
    }
  }
  // Compact empty columns to the left.
  int write_col = 0;
  for (int col = 0; col < s.width; ++col) {
    bool empty = true;
    for (int row = 0; row < s.height; ++row) {
      if (s.at(row, col) != 0) {
        empty = false;
        break;
      }
    }
    if (empty) continue;
    if (write_col != col) {
      for (int row = 0; row < s.height; ++row) {
        s.cells[static_cast<std::size_t>(row * s.width + write_col)] = s.at(row, col);
        s.cells[static_cast<std::size_t>(row * s.width + col)] = 0;
      }
    }
    ++write_col;
  }
}

}  // namespace

SgState sg_initial(const SgConfig& config, Seed seed) {
  check_config(config);
  SgState state;
  state.width = config.width;
  state.height = config.height;
  state.colours = config.colours;
  state.agents = config.agents;
  state.team_reward = config.team_reward;
  state.colour_objectives = config.colour_objectives;
  state.cells.resize(static_cast<std::size_t>(config.width * config.height));
  Rng layout = derive_stream(seed, 0);
  for (int& cell : state.cells) cell = 1 + static_cast<int>(layout.next_int(config.colours));
  state.scores.assign(static_cast<std::size_t>(config.agents),
                      ObjectiveVector(static_cast<std::size_t>(state.objectives()), 0.0));
  state.finished = !any_group_left(state);
  return state;
}

std::vector<int> sg_legal_moves(const SgState& state) {
  std::vector<int> moves;
  if (state.finished) return moves;
  std::vector<char> visited(state.cells.size(), 0);
  for (int cell = 0; cell < static_cast<int>(state.cells.size()); ++cell) {
    if (visited[static_cast<std::size_t>(cell)] || state.cells[static_cast<std::size_t>(cell)] == 0)
      continue;
    const std::vector<int> members = group_of(state, cell);
    for (int m : members) visited[static_cast<std::size_t>(m)] = 1;
    if (members.size() >= 2) moves.push_back(*std::min_element(members.begin(), members.end()));
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

SgStepResult sg_step(const SgState& state, int cell) {
  if (state.finished) raise(Errc::GameOver, "the game already ended");
  if (cell < 0 || cell >= static_cast<int>(state.cells.size()))
    raise(Errc::GroupTooSmall, "cell index out of range");
  const int colour = state.cells[static_cast<std::size_t>(cell)];
  if (colour == 0) raise(Errc::GroupTooSmall, "selected cell is empty");
  const std::vector<int> members = group_of(state, cell);
  if (members.size() < 2) raise(Errc::GroupTooSmall, "groups need at least 2 tiles");

  SgState next = state;
  for (int m : members) next.cells[static_cast<std::size_t>(m)] = 0;
  settle(next);
  ++next.moves;

  const double points = static_cast<double>(members.size() * members.size());
  const std::size_t objective =
      next.colour_objectives ? static_cast<std::size_t>(colour - 1) : 0;
  std::vector<ObjectiveVector> rewards(
      static_cast<std::size_t>(next.agents),
      ObjectiveVector(static_cast<std::size_t>(next.objectives()), 0.0));
  for (int a = 0; a < next.agents; ++a) {
    if (next.team_reward || a == next.mover) {
      rewards[static_cast<std::size_t>(a)][objective] = points;
      next.scores[static_cast<std::size_t>(a)][objective] += points;
    }
  }
  next.mover = (next.mover + 1) % next.agents;
  next.finished = !any_group_left(next);
  return SgStepResult{std::move(next), std::move(rewards), static_cast<int>(members.size())};
}

std::string sg_to_text(const SgState& state) {
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

SgState sg_from_text(const SgConfig& config, const std::string& text) {
  SgState state = sg_initial(config, 0);
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
      if (c < '0' || c >= static_cast<char>('0' + config.colours))
        raise(Errc::FileInvalid, "tile colour outside the configured range");
      state.cells[static_cast<std::size_t>(row * config.width + col)] = c - '0' + 1;
    }
    --row;
  }
  state.finished = !any_group_left(state);
  return state;
}

SameGameEnv::SameGameEnv(SgConfig config)
    : config_(config),
      state_(sg_initial(config, 0)),
      action_space_(Space::discrete(static_cast<std::int64_t>(config.width) * config.height)) {
  std::vector<double> low(1 + static_cast<std::size_t>(config.width * config.height), 0.0);
  std::vector<double> high(low.size(), static_cast<double>(config.colours));
  high[0] = static_cast<double>(config.agents - 1);
  observation_space_ = Space::box(std::move(low), std::move(high));
  std::vector<AgentId> players;
  for (int a = 0; a < config.agents; ++a) players.push_back("player_" + std::to_string(a));
  init_agents(std::move(players));
}

const Space& SameGameEnv::observation_space(const AgentId&) const { return observation_space_; }
const Space& SameGameEnv::action_space(const AgentId&) const { return action_space_; }

void SameGameEnv::game_reset(Seed seed) { state_ = sg_initial(config_, seed); }

void SameGameEnv::game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) {
  SgStepResult result = sg_step(state_, static_cast<int>(std::get<std::int64_t>(action)));
  state_ = std::move(result.state);
  for (std::size_t a = 0; a < rewards.size(); ++a) rewards[a] = result.rewards[a];
}

Observation SameGameEnv::game_observe(int) const {
  std::vector<double> obs;
  obs.reserve(1 + state_.cells.size());
  obs.push_back(static_cast<double>(state_.mover));
  for (int cell : state_.cells) obs.push_back(static_cast<double>(cell));
  return obs;
}

}  // namespace vecgames
