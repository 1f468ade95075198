#include "vecgames/envs/gem_mining.hpp"

#include <cmath>

namespace vecgames {

MiningInstance gem_generate(Seed seed, int villages, int gem_types, GemLimits limits) {
  if (villages < 2) raise(Errc::InvalidLimits, "need at least 2 villages");
  if (gem_types < 1) raise(Errc::InvalidLimits, "need at least 1 gem type");
  if (limits.min_workers < 1 || limits.min_workers > limits.max_workers)
    raise(Errc::InvalidLimits, "bad worker limits");
  if (limits.min_connections < 1 || limits.min_connections > limits.max_connections)
    raise(Errc::InvalidLimits, "bad connection limits");

  Rng workers_rng = derive_stream(seed, 0);
  Rng connect_rng = derive_stream(seed, 1);
  Rng probs_rng = derive_stream(seed, 2);

  MiningInstance inst;
  inst.gem_types = gem_types;
  inst.workers.resize(static_cast<std::size_t>(villages));
  inst.connections.resize(static_cast<std::size_t>(villages));
  for (int v = 0; v < villages; ++v) {
    inst.workers[static_cast<std::size_t>(v)] =
        limits.min_workers +
        static_cast<int>(workers_rng.next_int(limits.max_workers - limits.min_workers + 1));
    inst.connections[static_cast<std::size_t>(v)] =
        limits.min_connections +
        static_cast<int>(connect_rng.next_int(limits.max_connections - limits.min_connections + 1));
  }
  // The last village reaches the maximum number of mines.
  inst.connections.back() = limits.max_connections;
  inst.mine_count = villages + limits.max_connections - 1;

  inst.base_probs.assign(static_cast<std::size_t>(inst.mine_count),
                         std::vector<double>(static_cast<std::size_t>(gem_types), 0.0));
  for (auto& row : inst.base_probs) {
    for (double& p : row) p = probs_rng.next_range(0.01, 0.5);
  }
  return inst;
}

std::vector<std::vector<double>> gem_probabilities(const MiningInstance& inst,
                                                   const std::vector<int>& joint) {
  const int villages = static_cast<int>(inst.workers.size());
  if (static_cast<int>(joint.size()) != villages)
    raise(Errc::IllegalMineChoice, "one mine choice per village required");

  std::vector<int> staffing(static_cast<std::size_t>(inst.mine_count), 0);
  for (int v = 0; v < villages; ++v) {
    const int offset = joint[static_cast<std::size_t>(v)];
    if (offset < 0 || offset >= inst.connections[static_cast<std::size_t>(v)])
      raise(Errc::IllegalMineChoice, "village chose a mine outside its range");
    staffing[static_cast<std::size_t>(inst.first_mine(v) + offset)] +=
        inst.workers[static_cast<std::size_t>(v)];
  }

  std::vector<std::vector<double>> probs(
      static_cast<std::size_t>(inst.mine_count),
      std::vector<double>(static_cast<std::size_t>(inst.gem_types), 0.0));
  for (int m = 0; m < inst.mine_count; ++m) {
    const int w = staffing[static_cast<std::size_t>(m)];
    if (w == 0) continue;  // no workers, no gems
    double total = 0.0;
    for (int o = 0; o < inst.gem_types; ++o) {
      const double p = inst.base_probs[static_cast<std::size_t>(m)][static_cast<std::size_t>(o)] *
                       std::pow(inst.bonus, w - 1);
      probs[static_cast<std::size_t>(m)][static_cast<std::size_t>(o)] = p;
      total += p;
    }
    if (total > inst.cap) {
      const double scale = inst.cap / total;
      for (double& p : probs[static_cast<std::size_t>(m)]) p *= scale;
    }
  }
  return probs;
}

ObjectiveVector gem_step(const MiningInstance& inst, const std::vector<int>& joint, Rng& rng) {
  const auto probs = gem_probabilities(inst, joint);
  ObjectiveVector found(static_cast<std::size_t>(inst.gem_types), 0.0);
  for (const auto& mine : probs) {
    for (int o = 0; o < inst.gem_types; ++o) {
      if (mine[static_cast<std::size_t>(o)] > 0.0 &&
          rng.bernoulli(mine[static_cast<std::size_t>(o)]))
        found[static_cast<std::size_t>(o)] += 1.0;
    }
  }
  return found;
}

ObjectiveVector gem_expected(const MiningInstance& inst, const std::vector<int>& joint) {
  const auto probs = gem_probabilities(inst, joint);
  ObjectiveVector expected(static_cast<std::size_t>(inst.gem_types), 0.0);
  for (const auto& mine : probs) {
    for (int o = 0; o < inst.gem_types; ++o)
      expected[static_cast<std::size_t>(o)] += mine[static_cast<std::size_t>(o)];
  }
  return expected;
}

GemMiningEnv::GemMiningEnv(MiningInstance instance)
    : instance_(std::move(instance)), observation_space_(Space::discrete(1)) {
  std::vector<AgentId> names;
  for (std::size_t v = 0; v < instance_.workers.size(); ++v) {
    names.push_back(indexed_agent_name("village_", static_cast<int>(v),
                                       static_cast<int>(instance_.workers.size())));
    action_spaces_.push_back(Space::discrete(instance_.connections[v]));
  }
  set_possible_agents(std::move(names));
}

const Space& GemMiningEnv::observation_space(const AgentId&) const { return observation_space_; }

const Space& GemMiningEnv::action_space(const AgentId& agent) const {
  const auto& all = possible_agents();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == agent) return action_spaces_[i];
  }
  raise(Errc::UnknownAgent, "no village named " + agent);
}

ResetOutput GemMiningEnv::reset(Seed seed) {
  rewards_rng_ = derive_stream(seed, 10);
  stepped_ = false;
  mark_reset();
  ResetOutput out;
  for (const auto& agent : agents()) {
    out.observations[agent] = std::int64_t{0};
    out.infos[agent] = Info{};
  }
  return out;
}

std::vector<int> GemMiningEnv::joint_from_actions(const AgentMap<Action>& actions) const {
  std::vector<int> joint;
  for (const auto& agent : possible_agents()) {
    joint.push_back(static_cast<int>(std::get<std::int64_t>(actions.at(agent))));
  }
  return joint;
}

StepOutput GemMiningEnv::step(const AgentMap<Action>& actions) {
  check_actions(actions);
  const ObjectiveVector reward = gem_step(instance_, joint_from_actions(actions), rewards_rng_);
  stepped_ = true;

  StepOutput out;
  for (const auto& agent : agents()) {
    out.observations[agent] = std::int64_t{0};
    out.rewards[agent] = reward;  // one shared team reward
    out.terminations[agent] = true;
    out.truncations[agent] = false;
    out.infos[agent] = Info{};
  }
  if (debug_validation()) validate_output(out);
  retire_finished(out);
  return out;
}

ObjectiveVector GemMiningEnv::expected_team_return(const AgentMap<Action>& actions) const {
  return gem_expected(instance_, joint_from_actions(actions));
}

std::unique_ptr<Env> GemMiningEnv::clone() const { return std::make_unique<GemMiningEnv>(*this); }

std::uint64_t GemMiningEnv::state_fingerprint() const {
  Fnv1a hash;
  hash.add(static_cast<std::uint64_t>(stepped_ ? 1 : 0));
  return hash.value;
}

std::optional<RewardBounds> GemMiningEnv::reward_bounds() const {
  RewardBounds bounds;
  bounds.low.assign(static_cast<std::size_t>(instance_.gem_types), 0.0);
  bounds.high.assign(static_cast<std::size_t>(instance_.gem_types),
                     static_cast<double>(instance_.mine_count));
  return bounds;
}

}  // namespace vecgames
