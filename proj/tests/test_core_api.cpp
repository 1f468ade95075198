#include "doctest.h"

#include "test_support.hpp"
#include "vecgames/core/aec.hpp"
#include "vecgames/envs/gem_mining.hpp"
#include "vecgames/envs/item_gathering.hpp"
#include "vecgames/envs/swarm.hpp"

using namespace vecgames;

TEST_SUITE_BEGIN("core_api");

TEST_CASE("spaces validate membership") {
  const Space d = Space::discrete(3);
  CHECK(d.contains(Action{std::int64_t{0}}));
  CHECK(d.contains(Action{std::int64_t{2}}));
  CHECK_FALSE(d.contains(Action{std::int64_t{3}}));
  CHECK_FALSE(d.contains(Action{std::vector<double>{1.0}}));

  const Space b = Space::box({-1.0, 0.0}, {1.0, 2.0});
  CHECK(b.contains(Action{std::vector<double>{0.0, 2.0}}));
  CHECK_FALSE(b.contains(Action{std::vector<double>{0.0, 2.1}}));
  CHECK_FALSE(b.contains(Action{std::vector<double>{0.0}}));

  CHECK_THROWS_AS(Space::discrete(0), Error);
  CHECK_THROWS_AS(Space::box({1.0}, {0.0}), Error);
  CHECK(Space::box({0.0}, {3.0}).is_tabular());
  CHECK_FALSE(Space::box({0.0}, {0.5}).is_tabular());
}

TEST_CASE("reset is deterministic for a fixed config and seed") {
  GatherConfig config;
  config.layout_seed.reset();  // layout drawn from the reset seed
  ItemGatheringEnv a(config), b(config);
  const ResetOutput ra = a.reset(123);
  const ResetOutput rb = b.reset(123);
  CHECK(ra.observations == rb.observations);
  CHECK(a.agents() == a.possible_agents());
}

TEST_CASE("distinct seeds can change the layout but never the agent set") {
  GatherConfig config;
  config.width = 3;
  config.height = 3;
  config.items_per_colour = 1;
  config.colours = 2;
  config.layout_seed.reset();
  ItemGatheringEnv env(config);
  const ResetOutput first = env.reset(1);
  const auto agents_first = env.agents();
  const ResetOutput second = env.reset(2);
  CHECK(agents_first == env.agents());
  CHECK(first.observations != second.observations);  // these two seeds differ
}

TEST_CASE("default item gathering observes 2 agents") {
  ItemGatheringEnv env(GatherConfig{});
  const ResetOutput out = env.reset(0);
  CHECK(out.observations.size() == 2);
}

TEST_CASE("step contract errors") {
  MiningInstance inst = gem_generate(3, 2, 2);
  GemMiningEnv env(inst);
  env.reset(0);

  AgentMap<Action> actions;
  actions[env.possible_agents()[0]] = std::int64_t{0};
  CHECK_THROWS_AS(env.step(actions), Error);  // missing second agent

  actions[env.possible_agents()[1]] = std::int64_t{99};
  CHECK_THROWS_AS(env.step(actions), Error);  // out of space

  actions[env.possible_agents()[1]] = std::int64_t{0};
  const StepOutput out = env.step(actions);
  for (const auto& [agent, term] : out.terminations) CHECK(term);  // one-shot
  CHECK(env.agents().empty());
  CHECK_THROWS_AS(env.step(actions), Error);  // stepped past termination
}

TEST_CASE("all-zero-reward environment emits zero vectors") {
  testing::TeamBanditEnv env({2, 2}, {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  env.reset(0);
  AgentMap<Action> actions;
  for (const auto& agent : env.agents()) actions[agent] = std::int64_t{1};
  const StepOutput out = env.step(actions);
  for (const auto& [agent, reward] : out.rewards)
    CHECK(reward == ObjectiveVector{0.0, 0.0});
}

TEST_CASE("debug validation accepts well-formed outputs") {
  GatherConfig config = testing::tiny_gather_fixture();
  ItemGatheringEnv env(config);
  env.set_debug_validation(true);
  env.reset(0);
  Rng rng(3);
  while (!env.agents().empty()) {
    AgentMap<Action> actions;
    for (const auto& agent : env.agents()) actions[agent] = rng.next_int(5);
    env.step(actions);  // validates observations and rewards every step
  }
}

TEST_CASE("StepOutput maps share one key set on random rollouts") {
  SwarmConfig config;
  config.drones = 3;
  config.horizon = 40;
  SwarmEnv env(config);
  Rng rng(7);
  for (int episode = 0; episode < 5; ++episode) {
    env.reset(static_cast<Seed>(episode));
    while (!env.agents().empty()) {
      AgentMap<Action> actions;
      for (const auto& agent : env.agents()) {
        actions[agent] = std::vector<double>{rng.next_range(-1.0, 1.0),
                                             rng.next_range(-1.0, 1.0),
                                             rng.next_range(-1.0, 1.0)};
      }
      const StepOutput out = env.step(actions);
      CHECK(out.observations.size() == out.rewards.size());
      CHECK(out.rewards.size() == out.terminations.size());
      CHECK(out.terminations.size() == out.truncations.size());
      CHECK(out.truncations.size() == out.infos.size());
      for (const auto& [agent, reward] : out.rewards) {
        CHECK(reward.size() == 2);
        CHECK(all_finite(reward));
      }
    }
  }
}

TEST_CASE("aec adapter: one cycle equals one parallel step") {
  GatherConfig config = testing::tiny_gather_fixture();
  ItemGatheringEnv reference(config);
  ParallelToAec adapter(std::make_unique<ItemGatheringEnv>(config));

  reference.reset(5);
  adapter.reset(5);
  Rng rng(11);

  AgentMap<Action> joint;
  for (const auto& agent : reference.agents()) joint[agent] = rng.next_int(5);
  const StepOutput expected = reference.step(joint);

  for (std::size_t turn = 0; turn < joint.size(); ++turn) {
    const AgentId agent = adapter.current_agent();
    adapter.step(joint.at(agent));
  }
  CHECK(adapter.underlying_steps() == 1);

  // After the cycle each agent carries exactly the parallel step's signals.
  for (std::size_t turn = 0; turn < joint.size(); ++turn) {
    const AgentId agent = adapter.current_agent();
    const AecView view = adapter.last();
    CHECK(view.reward == expected.rewards.at(agent));
    CHECK(view.terminated == expected.terminations.at(agent));
    CHECK(view.observation == expected.observations.at(agent));
    adapter.step(joint.at(agent));  // keep cycling; nobody finished at step 1
  }
  CHECK(adapter.underlying_steps() == 2);
}

TEST_CASE("aec adapter: terminated agents must pass an absent action") {
  MiningInstance inst = gem_generate(3, 2, 2);
  ParallelToAec adapter(std::make_unique<GemMiningEnv>(inst));
  adapter.reset(0);
  adapter.step(Action{std::int64_t{0}});
  adapter.step(Action{std::int64_t{0}});  // fires the one-shot step
  CHECK(adapter.last().terminated);
  CHECK_THROWS_AS(adapter.step(Action{std::int64_t{0}}), Error);
  adapter.step(std::nullopt);
  adapter.step(std::nullopt);
  CHECK(adapter.agents().empty());
}

TEST_CASE("aec adapter: single-agent environment is a pass-through") {
  GatherConfig config;
  config.n_agents = 1;
  config.width = 3;
  config.height = 3;
  config.colours = 2;
  config.items_per_colour = 1;
  config.horizon = 4;
  ParallelToAec adapter(std::make_unique<ItemGatheringEnv>(config));
  adapter.reset(0);
  for (int t = 1; t <= 3; ++t) {
    adapter.step(Action{std::int64_t{4}});  // stay
    CHECK(adapter.underlying_steps() == t);
  }
}

TEST_CASE("aec adapter: three agents step the wrapped env once per three calls") {
  SwarmConfig config;
  config.drones = 3;
  ParallelToAec adapter(std::make_unique<SwarmEnv>(config));
  adapter.reset(1);
  const Action still{std::vector<double>{0.0, 0.0, 0.0}};
  for (int call = 1; call <= 9; ++call) {
    adapter.step(still);
    CHECK(adapter.underlying_steps() == call / 3);
  }
}

TEST_SUITE_END();
