#include "vecgames/learn/enumerate.hpp"

#include <cmath>

#include "vecgames/concepts/dominance.hpp"

namespace vecgames {

namespace {

constexpr double kCandidateGuard = 1e7;

std::vector<std::int64_t> discrete_action_counts(const Env& env) {
  std::vector<std::int64_t> counts;
  for (const auto& agent : env.possible_agents()) {
    const Space& space = env.action_space(agent);
    if (!space.is_discrete())
      raise(Errc::NonDiscreteAction, "enumeration needs discrete action spaces");
    counts.push_back(space.as_discrete().n);
  }
  return counts;
}

AgentMap<Action> joint_to_actions(const Env& env, const std::vector<std::int64_t>& counts,
                                  std::int64_t joint_code) {
  AgentMap<Action> actions;
  const auto& roster = env.possible_agents();
  for (std::size_t i = roster.size(); i-- > 0;) {
    actions[roster[i]] = joint_code % counts[i];
    joint_code /= counts[i];
  }
  return actions;
}

}  // namespace

std::vector<ObjectiveVector> brute_force_pf(Env& env, int horizon, Seed reset_seed) {
  if (horizon < 1) raise(Errc::InvalidCounts, "horizon must be positive");
  const auto counts = discrete_action_counts(env);
  double joint_actions = 1.0;
  for (std::int64_t c : counts) joint_actions *= static_cast<double>(c);

  const OneShotExact* exact = env.one_shot_exact();
  const double candidates =
      exact != nullptr ? joint_actions : std::pow(joint_actions, horizon);
  if (candidates > kCandidateGuard)
    raise(Errc::SpaceTooLarge, "candidate policy space exceeds the enumeration guard");
  if (exact == nullptr && !env.deterministic())
    raise(Errc::RuntimeFailure,
          "stochastic dynamics need a closed-form expectation for exact enumeration");

  const auto joint_count = static_cast<std::int64_t>(joint_actions);
  const double n = static_cast<double>(env.possible_agents().size());
  std::vector<ObjectiveVector> values;

  if (exact != nullptr) {
    env.reset(reset_seed);
    for (std::int64_t code = 0; code < joint_count; ++code)
      values.push_back(exact->expected_team_return(joint_to_actions(env, counts, code)));
    return pareto_filter(values);
  }

  // Open-loop sequences: horizon digits in base joint_count.
  std::vector<std::int64_t> sequence(static_cast<std::size_t>(horizon), 0);
  const auto d = static_cast<std::size_t>(env.num_objectives());
  while (true) {
    env.reset(reset_seed);
    ObjectiveVector value(d, 0.0);
    for (int t = 0; t < horizon && !env.agents().empty(); ++t) {
      AgentMap<Action> all = joint_to_actions(env, counts, sequence[static_cast<std::size_t>(t)]);
      AgentMap<Action> active;
      for (const auto& agent : env.agents()) active[agent] = all.at(agent);
      StepOutput out = env.step(active);
      for (const auto& [agent, reward] : out.rewards) value += reward;
    }
    for (double& x : value) x /= n;
    values.push_back(std::move(value));

    // Odometer increment.
    std::size_t digit = sequence.size();
    while (digit-- > 0) {
      if (++sequence[digit] < joint_count) break;
      sequence[digit] = 0;
      if (digit == 0) {
        return pareto_filter(values);
      }
    }
  }
}

Monfg monfg_from_env(Env& env, Seed reset_seed) {
  const auto counts = discrete_action_counts(env);
  double joint_actions = 1.0;
  for (std::int64_t c : counts) joint_actions *= static_cast<double>(c);
  if (joint_actions > kCandidateGuard)
    raise(Errc::SpaceTooLarge, "joint action space exceeds the enumeration guard");

  const OneShotExact* exact = env.one_shot_exact();
  if (!env.deterministic() && (exact == nullptr || !env.team_reward()))
    raise(Errc::RuntimeFailure, "stochastic games need an exact team expectation");

  std::vector<int> int_counts;
  for (std::int64_t c : counts) int_counts.push_back(static_cast<int>(c));
  Monfg game(int_counts, env.num_objectives());

  const auto n = env.possible_agents().size();
  std::vector<int> joint(n, 0);
  for (std::int64_t code = 0; code < static_cast<std::int64_t>(joint_actions); ++code) {
    AgentMap<Action> actions = joint_to_actions(env, counts, code);
    std::int64_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      joint[i] = static_cast<int>(rest % counts[i]);
      rest /= counts[i];
    }
    ValueMatrix payoff;
    if (env.deterministic()) {
      env.reset(reset_seed);
      StepOutput out = env.step(actions);
      for (const auto& agent : env.possible_agents()) payoff.rows.push_back(out.rewards.at(agent));
    } else {
      env.reset(reset_seed);
      const ObjectiveVector expected = exact->expected_team_return(actions);
      payoff.rows.assign(n, expected);
    }
    game.set_payoff(joint, std::move(payoff));
  }
  return game;
}

}  // namespace vecgames
