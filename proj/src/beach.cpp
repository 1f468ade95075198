#include "vecgames/envs/beach.hpp"

#include <algorithm>
#include <cmath>

namespace vecgames {

SectionRewards beach_section_rewards(const std::vector<int>& count_a,
                                     const std::vector<int>& count_b,
                                     const std::vector<double>& capacities) {
  SectionRewards rewards;
  rewards.l_cap.resize(capacities.size());
  rewards.l_mix.resize(capacities.size());
  for (std::size_t b = 0; b < capacities.size(); ++b) {
    const int total = count_a[b] + count_b[b];
    const double x = static_cast<double>(total);
    rewards.l_cap[b] = total == 0 ? 0.0 : x * std::exp(-x / capacities[b]);
    rewards.l_mix[b] =
        total == 0 ? 0.0 : static_cast<double>(std::min(count_a[b], count_b[b])) / x;
    rewards.g_cap += rewards.l_cap[b];
    rewards.g_mix += rewards.l_mix[b];
  }
  return rewards;
}

std::int64_t beach_compat_index(int section, int type, int) {
  return static_cast<std::int64_t>(section) * 2 + type;
}

BeachEnv::BeachEnv(BeachConfig config)
    : config_(std::move(config)), action_space_(Space::discrete(3)) {
  if (config_.sections < 2) raise(Errc::InvalidLimits, "need at least 2 sections");
  if (config_.n_agents < 2) raise(Errc::InvalidLimits, "need at least 2 agents");
  if (config_.type_a_count < 0 || config_.type_a_count > config_.n_agents)
    raise(Errc::InvalidLimits, "type A count outside [0, n_agents]");
  if (config_.horizon < 1) raise(Errc::InvalidLimits, "horizon must be positive");
  if (config_.capacities.empty())
    config_.capacities.assign(static_cast<std::size_t>(config_.sections), config_.capacity);
  if (static_cast<int>(config_.capacities.size()) != config_.sections)
    raise(Errc::InvalidLimits, "one capacity per section required");
  for (double psi : config_.capacities) {
    if (!(psi > 0.0)) raise(Errc::InvalidLimits, "capacities must be positive");
  }
  config_.start_section_even = std::clamp(config_.start_section_even, 0, config_.sections - 1);
  config_.start_section_odd = std::clamp(config_.start_section_odd, 0, config_.sections - 1);

  // [own section, own type, per-section type A counts, per-section type B counts]
  std::vector<double> low(2 + 2 * static_cast<std::size_t>(config_.sections), 0.0);
  std::vector<double> high = low;
  high[0] = static_cast<double>(config_.sections - 1);
  high[1] = 1.0;
  for (std::size_t i = 2; i < high.size(); ++i) high[i] = static_cast<double>(config_.n_agents);
  observation_space_ = Space::box(std::move(low), std::move(high));

  std::vector<AgentId> names;
  for (int i = 0; i < config_.n_agents; ++i) names.push_back(indexed_agent_name("tourist_", i, config_.n_agents));
  set_possible_agents(std::move(names));
  positions_.assign(static_cast<std::size_t>(config_.n_agents), 0);
}

const Space& BeachEnv::observation_space(const AgentId&) const { return observation_space_; }
const Space& BeachEnv::action_space(const AgentId&) const { return action_space_; }

void BeachEnv::occupancy(std::vector<int>& count_a, std::vector<int>& count_b) const {
  count_a.assign(static_cast<std::size_t>(config_.sections), 0);
  count_b.assign(static_cast<std::size_t>(config_.sections), 0);
  for (int i = 0; i < config_.n_agents; ++i) {
    auto& counts = agent_type(i) == 0 ? count_a : count_b;
    counts[static_cast<std::size_t>(positions_[static_cast<std::size_t>(i)])] += 1;
  }
}

Observation BeachEnv::observe(int index) const {
  std::vector<int> count_a, count_b;
  occupancy(count_a, count_b);
  std::vector<double> obs;
  obs.reserve(2 + 2 * count_a.size());
  obs.push_back(static_cast<double>(positions_[static_cast<std::size_t>(index)]));
  obs.push_back(static_cast<double>(agent_type(index)));
  for (int c : count_a) obs.push_back(static_cast<double>(c));
  for (int c : count_b) obs.push_back(static_cast<double>(c));
  return obs;
}

ResetOutput BeachEnv::reset(Seed) {
  timestep_ = 0;
  for (int i = 0; i < config_.n_agents; ++i) {
    positions_[static_cast<std::size_t>(i)] =
        i % 2 == 0 ? config_.start_section_even : config_.start_section_odd;
  }
  mark_reset();
  ResetOutput out;
  const auto& all = possible_agents();
  for (int i = 0; i < config_.n_agents; ++i) {
    out.observations[all[static_cast<std::size_t>(i)]] = observe(i);
    out.infos[all[static_cast<std::size_t>(i)]] = Info{};
  }
  return out;
}

StepOutput BeachEnv::step(const AgentMap<Action>& actions) {
  check_actions(actions);
  const auto& all = possible_agents();
  for (int i = 0; i < config_.n_agents; ++i) {
    const auto move = std::get<std::int64_t>(actions.at(all[static_cast<std::size_t>(i)]));
    if (move < 0 || move > 2) raise(Errc::InvalidAction, "beach actions are 0, 1, 2");
    int& pos = positions_[static_cast<std::size_t>(i)];
    if (move == 0) pos = std::max(0, pos - 1);
    if (move == 2) pos = std::min(config_.sections - 1, pos + 1);
  }
  ++timestep_;
  const bool final_step = timestep_ >= config_.horizon;

  StepOutput out;
  SectionRewards rewards;
  if (final_step) {
    std::vector<int> count_a, count_b;
    occupancy(count_a, count_b);
    rewards = beach_section_rewards(count_a, count_b, config_.capacities);
  }
  for (int i = 0; i < config_.n_agents; ++i) {
    const AgentId& agent = all[static_cast<std::size_t>(i)];
    out.observations.emplace_hint(out.observations.end(), agent, observe(i));
    if (final_step) {
      const auto section = static_cast<std::size_t>(positions_[static_cast<std::size_t>(i)]);
      out.rewards.emplace_hint(
          out.rewards.end(), agent,
          config_.team_reward ? ObjectiveVector{rewards.g_cap, rewards.g_mix}
                              : ObjectiveVector{rewards.l_cap[section], rewards.l_mix[section]});
      out.infos.emplace_hint(out.infos.end(), agent,
                             Info{{"g_cap", rewards.g_cap}, {"g_mix", rewards.g_mix}});
    } else {
      out.rewards.emplace_hint(out.rewards.end(), agent, ObjectiveVector{0.0, 0.0});
      out.infos.emplace_hint(out.infos.end(), agent, Info{});
    }
    out.terminations.emplace_hint(out.terminations.end(), agent, final_step);
    out.truncations.emplace_hint(out.truncations.end(), agent, false);
  }
  if (debug_validation()) validate_output(out);
  retire_finished(out);
  return out;
}

std::unique_ptr<Env> BeachEnv::clone() const { return std::make_unique<BeachEnv>(*this); }

std::uint64_t BeachEnv::state_fingerprint() const {
  Fnv1a hash;
  hash.add(static_cast<std::uint64_t>(timestep_));
  for (int pos : positions_) hash.add(static_cast<std::uint64_t>(pos));
  return hash.value;
}

std::optional<RewardBounds> BeachEnv::reward_bounds() const {
  double cap_sum = 0.0;
  double cap_max = 0.0;
  for (double psi : config_.capacities) {
    cap_sum += psi / std::exp(1.0);
    cap_max = std::max(cap_max, psi / std::exp(1.0));
  }
  RewardBounds bounds;
  if (config_.team_reward) {
    bounds.low = {0.0, 0.0};
    bounds.high = {cap_sum, static_cast<double>(config_.sections) * 0.5};
  } else {
    bounds.low = {0.0, 0.0};
    bounds.high = {cap_max, 0.5};
  }
  return bounds;
}

BeachCompatObservation::BeachCompatObservation(std::unique_ptr<Env> env)
    : EnvWrapper(std::move(env)) {
  const auto* beach = dynamic_cast<const BeachEnv*>(&inner());
  if (beach == nullptr)
    raise(Errc::UnsupportedSpace, "compat observation applies to the beach environment");
  sections_ = beach->config().sections;
  observation_space_ = Space::discrete(static_cast<std::int64_t>(sections_) * 2);
}

const Space& BeachCompatObservation::observation_space(const AgentId&) const {
  return observation_space_;
}

Observation BeachCompatObservation::compact(const Observation& full) const {
  const auto& vec = std::get<std::vector<double>>(full);
  return beach_compat_index(static_cast<int>(vec[0]), static_cast<int>(vec[1]), sections_);
}

ResetOutput BeachCompatObservation::reset(Seed seed) {
  ResetOutput out = EnvWrapper::reset(seed);
  for (auto& [agent, obs] : out.observations) obs = compact(obs);
  return out;
}

StepOutput BeachCompatObservation::step(const AgentMap<Action>& actions) {
  StepOutput out = EnvWrapper::step(actions);
  for (auto& [agent, obs] : out.observations) obs = compact(obs);
  return out;
}

std::unique_ptr<Env> BeachCompatObservation::clone() const {
  return std::make_unique<BeachCompatObservation>(clone_inner());
}

}  // namespace vecgames
