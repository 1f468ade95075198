#include "vecgames/envs/swarm.hpp"

#include <algorithm>
#include <cmath>

namespace vecgames {

double squared_distance(const Vec3& a, const Vec3& b) { return (a - b).squared_norm(); }

ObjectiveVector swarm_rewards(const SwarmState& s) {
  const std::size_t n = s.positions.size();
  if (s.prev_positions.size() != n) raise(Errc::SizeMismatch, "drone counts differ");
  double improvement = 0.0;
  double separation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    improvement += squared_distance(s.prev_positions[i], s.prev_target) -
                   squared_distance(s.positions[i], s.prev_target);
    double pairwise = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) pairwise += squared_distance(s.positions[i], s.positions[j]);
    }
    separation += pairwise / static_cast<double>(n - 1);
  }
  return ObjectiveVector{improvement, separation};
}

Vec3 target_update(const SwarmConfig& config, const Vec3& target,
                   const std::vector<Vec3>& drone_positions, int timestep, Rng& target_rng) {
  switch (config.mode) {
    case SwarmMode::Surround:
      return target;
    case SwarmMode::Escort: {
      const double t = std::min<double>(timestep, config.escort_steps) /
                       static_cast<double>(config.escort_steps);
      return config.target + (config.escort_final - config.target) * t;
    }
    case SwarmMode::Catch: {
      Vec3 mean{0.0, 0.0, 0.0};
      for (const Vec3& p : drone_positions) mean = mean + p;
      mean = mean * (1.0 / static_cast<double>(drone_positions.size()));
      const Vec3 away = target - mean;
      const double distance = std::sqrt(away.squared_norm());
      if (distance > config.catch_threshold) {
        return target + away * (config.escape_speed / distance);
      }
      // Swarm centre on top of the target: flee in a random direction.
      const double z = 1.0 - 2.0 * target_rng.next_double();
      const double phi = 2.0 * M_PI * target_rng.next_double();
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Vec3 dir{r * std::cos(phi), r * std::sin(phi), z};
      return target + dir * config.escape_speed;
    }
  }
  return target;
}

SwarmEnv::SwarmEnv(SwarmConfig config)
    : config_(std::move(config)),
      action_space_(Space::box({-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0})) {
  if (config_.drones < 2) raise(Errc::InvalidLimits, "need at least 2 drones");
  if (config_.horizon < 1) raise(Errc::InvalidLimits, "horizon must be positive");
  if (config_.escort_steps < 1) raise(Errc::InvalidLimits, "escort needs at least 1 step");

  // [own xyz, target xyz, other drones' xyz]
  std::vector<double> low, high;
  for (int k = 0; k < config_.drones + 1; ++k) {
    low.insert(low.end(), {config_.bounds_low.x, config_.bounds_low.y, config_.bounds_low.z});
    high.insert(high.end(), {config_.bounds_high.x, config_.bounds_high.y, config_.bounds_high.z});
  }
  observation_space_ = Space::box(std::move(low), std::move(high));

  std::vector<AgentId> names;
  for (int i = 0; i < config_.drones; ++i) names.push_back(indexed_agent_name("drone_", i, config_.drones));
  set_possible_agents(std::move(names));
  state_.positions.assign(static_cast<std::size_t>(config_.drones), Vec3{});
  state_.prev_positions = state_.positions;
}

std::string SwarmEnv::id() const {
  switch (config_.mode) {
    case SwarmMode::Surround: return "swarm_surround";
    case SwarmMode::Escort: return "swarm_escort";
    case SwarmMode::Catch: return "swarm_catch";
  }
  return "swarm";
}

const Space& SwarmEnv::observation_space(const AgentId&) const { return observation_space_; }
const Space& SwarmEnv::action_space(const AgentId&) const { return action_space_; }

Vec3 SwarmEnv::clip_to_bounds(Vec3 p) const {
  p.x = std::clamp(p.x, config_.bounds_low.x, config_.bounds_high.x);
  p.y = std::clamp(p.y, config_.bounds_low.y, config_.bounds_high.y);
  p.z = std::clamp(p.z, config_.bounds_low.z, config_.bounds_high.z);
  return p;
}

Observation SwarmEnv::observe(int index) const {
  std::vector<double> obs;
  obs.reserve(3 * static_cast<std::size_t>(config_.drones + 1));
  const Vec3& self = state_.positions[static_cast<std::size_t>(index)];
  obs.insert(obs.end(), {self.x, self.y, self.z});
  obs.insert(obs.end(), {state_.target.x, state_.target.y, state_.target.z});
  for (int j = 0; j < config_.drones; ++j) {
    if (j == index) continue;
    const Vec3& other = state_.positions[static_cast<std::size_t>(j)];
    obs.insert(obs.end(), {other.x, other.y, other.z});
  }
  return obs;
}

ResetOutput SwarmEnv::reset(Seed seed) {
  target_rng_ = derive_stream(seed, 2);
  Rng layout = derive_stream(seed, 0);

  state_.timestep = 0;
  state_.target = config_.target;
  state_.prev_target = config_.target;
  const double phase = layout.next_range(0.0, 2.0 * M_PI);
  for (int i = 0; i < config_.drones; ++i) {
    const double angle = phase + 2.0 * M_PI * i / config_.drones;
    Vec3 p{config_.target.x + config_.spawn_radius * std::cos(angle),
           config_.target.y + config_.spawn_radius * std::sin(angle), config_.spawn_z};
    state_.positions[static_cast<std::size_t>(i)] = clip_to_bounds(p);
  }
  state_.prev_positions = state_.positions;

  mark_reset();
  ResetOutput out;
  const auto& all = possible_agents();
  for (int i = 0; i < config_.drones; ++i) {
    out.observations[all[static_cast<std::size_t>(i)]] = observe(i);
    out.infos[all[static_cast<std::size_t>(i)]] = Info{};
  }
  return out;
}

StepOutput SwarmEnv::step(const AgentMap<Action>& actions) {
  require_not_terminal();
  for (const auto& [agent, action] : actions) {
    const auto* vec = std::get_if<std::vector<double>>(&action);
    if (vec == nullptr || !action_space_.contains(action))
      raise(Errc::OutOfBoxAction, "swarm actions live in [-1, 1]^3");
  }
  check_actions(actions);

  state_.prev_positions = state_.positions;
  state_.prev_target = state_.target;
  const auto& all = possible_agents();
  for (int i = 0; i < config_.drones; ++i) {
    const auto& delta =
        std::get<std::vector<double>>(actions.at(all[static_cast<std::size_t>(i)]));
    Vec3& p = state_.positions[static_cast<std::size_t>(i)];
    p = clip_to_bounds(p + Vec3{delta[0], delta[1], delta[2]} * config_.speed_multiplier);
  }
  state_.target =
      clip_to_bounds(target_update(config_, state_.target, state_.positions, state_.timestep + 1,
                                   target_rng_));
  ++state_.timestep;

  const ObjectiveVector reward = swarm_rewards(state_);

  bool collision = false;
  bool contact = false;
  bool grounded = false;
  for (int i = 0; i < config_.drones; ++i) {
    const Vec3& p = state_.positions[static_cast<std::size_t>(i)];
    if (std::sqrt(squared_distance(p, state_.target)) < config_.contact_radius) contact = true;
    if (p.z <= config_.bounds_low.z) grounded = true;
    for (int j = i + 1; j < config_.drones; ++j) {
      if (std::sqrt(squared_distance(p, state_.positions[static_cast<std::size_t>(j)])) <
          config_.collision_radius)
        collision = true;
    }
  }
  const bool terminated = collision || contact || grounded;
  const bool truncated = !terminated && state_.timestep >= config_.horizon;

  StepOutput out;
  for (int i = 0; i < config_.drones; ++i) {
    const AgentId& agent = all[static_cast<std::size_t>(i)];
    out.observations[agent] = observe(i);
    out.rewards[agent] = reward;
    out.terminations[agent] = terminated;
    out.truncations[agent] = truncated;
    out.infos[agent] = Info{};
  }
  if (debug_validation()) validate_output(out);
  retire_finished(out);
  return out;
}

std::unique_ptr<Env> SwarmEnv::clone() const { return std::make_unique<SwarmEnv>(*this); }

std::uint64_t SwarmEnv::state_fingerprint() const {
  Fnv1a hash;
  hash.add(static_cast<std::uint64_t>(state_.timestep));
  for (const Vec3& p : state_.positions) {
    hash.add(p.x);
    hash.add(p.y);
    hash.add(p.z);
  }
  hash.add(state_.target.x);
  hash.add(state_.target.y);
  hash.add(state_.target.z);
  return hash.value;
}

std::optional<RewardBounds> SwarmEnv::reward_bounds() const {
  const double diagonal = (config_.bounds_high - config_.bounds_low).squared_norm();
  const double n = static_cast<double>(config_.drones);
  RewardBounds bounds;
  bounds.low = {-n * diagonal, 0.0};
  bounds.high = {n * diagonal, n * diagonal};
  return bounds;
}

}  // namespace vecgames
