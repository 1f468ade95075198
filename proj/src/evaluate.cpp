#include "vecgames/learn/evaluate.hpp"

namespace vecgames {

ObjectiveVector evaluate_policy(Env& env, const TabularPolicy& policy, int episodes, Seed seed) {
  if (episodes < 1) raise(Errc::InvalidCounts, "need at least one evaluation episode");
  const auto d = static_cast<std::size_t>(env.num_objectives());
  const double n = static_cast<double>(env.possible_agents().size());

  ObjectiveVector total(d, 0.0);
  for (int episode = 0; episode < episodes; ++episode) {
    ResetOutput start = env.reset(derive_seed(seed, static_cast<std::uint64_t>(episode)));
    AgentMap<Observation> obs = start.observations;
    ObjectiveVector episodic(d, 0.0);
    while (!env.agents().empty()) {
      AgentMap<Action> actions;
      for (const auto& agent : env.agents())
        actions[agent] = policy.greedy_action(agent, obs.at(agent));
      StepOutput out = env.step(actions);
      for (const auto& [agent, reward] : out.rewards) {
        episodic += reward;
        obs[agent] = out.observations.at(agent);
      }
    }
    for (double& x : episodic) x /= n;
    total += episodic;
  }
  for (double& x : total) x /= static_cast<double>(episodes);
  return total;
}

ObjectiveVector evaluate_policy_exact(Env& env, const TabularPolicy& policy) {
  const OneShotExact* exact = env.one_shot_exact();
  if (exact == nullptr)
    raise(Errc::RuntimeFailure, "environment has no closed-form one-shot evaluation");
  ResetOutput start = env.reset(0);
  AgentMap<Action> actions;
  for (const auto& agent : env.agents())
    actions[agent] = policy.greedy_action(agent, start.observations.at(agent));
  return exact->expected_team_return(actions);
}

}  // namespace vecgames
