#include "vecgames/learn/iql.hpp"

#include <algorithm>
#include <unordered_map>

namespace vecgames {

std::int64_t TabularPolicy::greedy_action(const AgentId& agent, const Observation& obs) const {
  auto table = q.find(agent);
  if (table == q.end()) raise(Errc::UnknownAgent, "no Q-table for agent " + agent);
  auto row = table->second.find(obs);
  if (row == table->second.end()) return 0;
  const auto& values = row->second;
  std::size_t best = 0;
  for (std::size_t a = 1; a < values.size(); ++a) {
    if (values[a] > values[best]) best = a;
  }
  return static_cast<std::int64_t>(best);
}

namespace {

// Argmax with a random choice among ties, so that identical learners do not
// herd onto the same action.
std::size_t sample_greedy(const std::vector<double>& values, Rng& rng) {
  double best = values[0];
  for (double v : values) best = std::max(best, v);
  int ties = 0;
  std::size_t pick = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] == best) {
      ++ties;
      if (rng.next_int(ties) == 0) pick = a;
    }
  }
  return pick;
}

}  // namespace

IqlResult iql_train(Env& env, const AgentMap<WeightVector>& weights, const IqlConfig& config) {
  const auto& roster = env.possible_agents();
  const int n = static_cast<int>(roster.size());
  const auto d = static_cast<std::size_t>(env.num_objectives());

  std::vector<const WeightVector*> weight_of(static_cast<std::size_t>(n));
  std::vector<std::int64_t> n_actions(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const AgentId& agent = roster[static_cast<std::size_t>(i)];
    if (!env.observation_space(agent).is_tabular())
      raise(Errc::NonDiscreteObservation,
            "tabular learning needs discrete or integer-box observations");
    if (!env.action_space(agent).is_discrete())
      raise(Errc::NonDiscreteAction, "tabular learning needs discrete actions");
    auto it = weights.find(agent);
    if (it == weights.end() || it->second.size() != d)
      raise(Errc::WeightLengthMismatch, "need a length-d weight vector per agent");
    weight_of[static_cast<std::size_t>(i)] = &it->second;
    n_actions[static_cast<std::size_t>(i)] = env.action_space(agent).as_discrete().n;
  }

  std::vector<std::map<Observation, std::vector<double>>> tables(static_cast<std::size_t>(n));
  std::vector<Rng> rngs;
  rngs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    rngs.push_back(derive_stream(config.seed, 100 + static_cast<std::uint64_t>(i)));

  IqlResult result;
  result.curve.reserve(static_cast<std::size_t>(config.episodes));

  double alpha = config.alpha;
  double epsilon = config.epsilon;
  std::unordered_map<AgentId, int> index_of;
  for (int i = 0; i < n; ++i) index_of[roster[static_cast<std::size_t>(i)]] = i;

  for (std::int64_t episode = 0; episode < config.episodes; ++episode) {
    ResetOutput start = env.reset(derive_seed(config.seed, 1000 + static_cast<std::uint64_t>(episode)));
    std::vector<Observation> obs(static_cast<std::size_t>(n));
    for (const auto& [agent, o] : start.observations) obs[static_cast<std::size_t>(index_of[agent])] = o;

    std::vector<ObjectiveVector> episodic(static_cast<std::size_t>(n), ObjectiveVector(d, 0.0));
    std::map<std::string, double> metrics;
    AgentMap<Action> actions;

    while (!env.agents().empty()) {
      actions.clear();
      std::vector<std::int64_t> chosen(static_cast<std::size_t>(n), -1);
      for (const auto& agent : env.agents()) {
        const int i = index_of[agent];
        auto& row = tables[static_cast<std::size_t>(i)]
                        .try_emplace(obs[static_cast<std::size_t>(i)],
                                     std::vector<double>(
                                         static_cast<std::size_t>(n_actions[static_cast<std::size_t>(i)]), 0.0))
                        .first->second;
        Rng& rng = rngs[static_cast<std::size_t>(i)];
        std::int64_t a;
        if (rng.next_double() < epsilon) {
          a = rng.next_int(n_actions[static_cast<std::size_t>(i)]);
        } else {
          a = static_cast<std::int64_t>(sample_greedy(row, rng));
        }
        chosen[static_cast<std::size_t>(i)] = a;
        actions.emplace_hint(actions.end(), agent, a);
      }

      StepOutput out = env.step(actions);

      double info_agents = 0.0;
      std::map<std::string, double> step_info;
      for (const auto& [agent, reward] : out.rewards) {
        const int i = index_of[agent];
        const double scalar = weight_of[static_cast<std::size_t>(i)]->utility(reward);
        episodic[static_cast<std::size_t>(i)] += reward;

        auto& table = tables[static_cast<std::size_t>(i)];
        auto& row = table.at(obs[static_cast<std::size_t>(i)]);
        const Observation& next = out.observations.at(agent);
        double target = scalar;
        if (!out.terminations.at(agent)) {
          auto next_row = table.find(next);
          if (next_row != table.end())
            target += config.gamma *
                      *std::max_element(next_row->second.begin(), next_row->second.end());
        }
        double& cell = row[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])];
        cell += alpha * (target - cell);
        obs[static_cast<std::size_t>(i)] = next;

        info_agents += 1.0;
        for (const auto& [key, value] : out.infos.at(agent)) step_info[key] += value;
      }
      if (info_agents > 0.0) {
        for (const auto& [key, value] : step_info) metrics[key] += value / info_agents;
      }
    }

    double scalarised = 0.0;
    ObjectiveVector mean_return(d, 0.0);
    for (int i = 0; i < n; ++i) {
      scalarised += weight_of[static_cast<std::size_t>(i)]->utility(episodic[static_cast<std::size_t>(i)]);
      mean_return += episodic[static_cast<std::size_t>(i)];
    }
    scalarised /= static_cast<double>(n);
    for (double& x : mean_return) x /= static_cast<double>(n);

    result.curve.push_back(scalarised);
    result.mean_returns.push_back(std::move(mean_return));
    result.metrics.push_back(std::move(metrics));

    alpha = std::max(config.alpha_min, alpha * config.alpha_decay);
    epsilon = std::max(config.epsilon_min, epsilon * config.epsilon_decay);
  }

  for (int i = 0; i < n; ++i)
    result.policy.q[roster[static_cast<std::size_t>(i)]] = std::move(tables[static_cast<std::size_t>(i)]);
  return result;
}

}  // namespace vecgames
