#include "vecgames/learn/decomposition.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "vecgames/learn/weights.hpp"

namespace vecgames {

Learner make_iql_learner(IqlConfig base) {
  return [base](Env& scalar_env, const StopCriterion& stop, Seed seed) {
    IqlConfig config = base;
    config.episodes = stop.episodes;
    config.seed = seed;
    AgentMap<WeightVector> unit;
    for (const auto& agent : scalar_env.possible_agents())
      unit.emplace(agent, WeightVector({1.0}));
    return iql_train(scalar_env, unit, config).policy;
  };
}

namespace {

std::string weight_tag(const WeightVector& w) {
  std::ostringstream out;
  out << "w=[";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i > 0 ? "," : "") << w[i];
  out << "]";
  return out.str();
}

}  // namespace

ParetoArchive decomposition_train(const Env& env, const Learner& learner,
                                  const DecompositionConfig& config) {
  if (!env.team_reward())
    raise(Errc::NotTeamReward, "decomposition needs a shared team reward");

  const std::vector<WeightVector> weights =
      generate_weights(config.num_weights, env.num_objectives());

  struct SubResult {
    ObjectiveVector value;
    std::string tag;
  };
  std::vector<SubResult> results(weights.size());

  auto solve = [&](std::size_t index) {
    const WeightVector& w = weights[index];

    std::unique_ptr<Env> train_env = env.clone();
    for (const auto& spec : config.normalisation)
      train_env = std::make_unique<NormaliseReward>(std::move(train_env), spec);
    AgentMap<WeightVector> per_agent;
    for (const auto& agent : train_env->possible_agents()) per_agent.emplace(agent, w);
    train_env = std::make_unique<LineariseReward>(std::move(train_env), std::move(per_agent));

    TabularPolicy policy =
        learner(*train_env, config.stop, derive_seed(config.seed, index));

    // The policy is always scored on the original, unwrapped rewards.
    std::unique_ptr<Env> eval_env = env.clone();
    ObjectiveVector value;
    if (config.exact_eval && eval_env->one_shot_exact() != nullptr) {
      value = evaluate_policy_exact(*eval_env, policy);
    } else {
      value = evaluate_policy(*eval_env, policy, config.eval_episodes,
                              derive_seed(config.seed, 9000 + index));
    }
    results[index] = SubResult{std::move(value), weight_tag(w)};
  };

  const int workers = std::max(1, config.threads);
  if (workers == 1) {
    for (std::size_t i = 0; i < weights.size(); ++i) solve(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < weights.size(); i = next.fetch_add(1))
          solve(i);
      });
    }
    for (auto& thread : pool) thread.join();
  }

  // Insertion in weight order keeps the outcome identical across schedules.
  ParetoArchive archive;
  for (auto& result : results) archive.insert(std::move(result.value), std::move(result.tag));
  return archive;
}

}  // namespace vecgames
