#pragma once

#include <vector>

#include "vecgames/core/env.hpp"

namespace vecgames {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double squared_norm() const { return x * x + y * y + z * z; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

double squared_distance(const Vec3& a, const Vec3& b);

enum class SwarmMode { Surround, Escort, Catch };

struct SwarmConfig {
  int drones = 3;
  SwarmMode mode = SwarmMode::Surround;
  Vec3 bounds_low{-5.0, -5.0, 0.0};
  Vec3 bounds_high{5.0, 5.0, 5.0};
  Vec3 target{0.0, 0.0, 2.5};      // static target / escort start
  Vec3 escort_final{3.0, 3.0, 1.5};
  int escort_steps = 150;
  double escape_speed = 0.1;       // catch mode displacement per step
  double catch_threshold = 0.2;    // flee while the swarm mean is farther than this
  double collision_radius = 0.2;
  double contact_radius = 0.2;
  double spawn_radius = 1.5;
  double spawn_z = 1.0;
  double speed_multiplier = 1.0;   // scales actions before clipping
  int horizon = 200;
};

struct SwarmState {
  std::vector<Vec3> positions;
  std::vector<Vec3> prev_positions;
  Vec3 target;
  Vec3 prev_target;
  int timestep = 0;
};

// Team reward (d = 2): objective 0 is the summed potential-based improvement
// of the squared distance to the previous target position; objective 1 is the
// summed mean squared separation between drones.
ObjectiveVector swarm_rewards(const SwarmState& prev_then_current);

// Target motion for one step. Surround: static. Escort: linear interpolation
// from the start to escort_final over escort_steps. Catch: flee the swarm
// mean at escape_speed, or move in a random unit direction when the mean is
// within catch_threshold. Always clipped to the map bounds.
Vec3 target_update(const SwarmConfig& config, const Vec3& target,
                   const std::vector<Vec3>& drone_positions, int timestep, Rng& target_rng);

// Cooperative point-mass drones forming around a static, moving or evading
// target. Actions are displacement vectors in [-1, 1]^3.
class SwarmEnv : public EnvBase {
 public:
  explicit SwarmEnv(SwarmConfig config);

  std::string id() const override;
  int num_objectives() const override { return 2; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::uint64_t state_fingerprint() const override;
  bool team_reward() const override { return true; }
  bool deterministic() const override { return config_.mode != SwarmMode::Catch; }
  std::optional<RewardBounds> reward_bounds() const override;

  const SwarmConfig& config() const { return config_; }
  const SwarmState& state() const { return state_; }

 private:
  Observation observe(int index) const;
  Vec3 clip_to_bounds(Vec3 p) const;

  SwarmConfig config_;
  Space observation_space_;
  Space action_space_;
  SwarmState state_;
  Rng target_rng_;
};

}  // namespace vecgames
