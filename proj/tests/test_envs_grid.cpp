#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "vecgames/envs/beach.hpp"
#include "vecgames/io/config.hpp"

using namespace vecgames;

namespace {

AgentMap<Action> uniform_actions(const Env& env, std::int64_t a) {
  AgentMap<Action> actions;
  for (const auto& agent : env.agents()) actions[agent] = a;
  return actions;
}

}  // namespace

TEST_SUITE_BEGIN("envs_grid");

TEST_CASE("beach section reward equations") {
  const std::vector<double> psi{3.0, 3.0};
  SUBCASE("empty sections pay nothing") {
    const SectionRewards r = beach_section_rewards({0, 0}, {0, 0}, psi);
    CHECK(r.l_cap[0] == 0.0);
    CHECK(r.l_mix[0] == 0.0);
    CHECK(r.g_cap == 0.0);
  }
  SUBCASE("capacity reward peaks at psi") {
    const SectionRewards r = beach_section_rewards({3, 0}, {0, 0}, psi);
    CHECK(r.l_cap[0] == doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(std::abs(r.l_cap[0] - 1.10364) < 1e-5);
    for (int x = 0; x <= 9; ++x) {
      const SectionRewards other = beach_section_rewards({x, 0}, {0, 0}, psi);
      CHECK(r.l_cap[0] >= other.l_cap[0]);
    }
  }
  SUBCASE("mixture reward is half at an even mix") {
    const SectionRewards r = beach_section_rewards({2, 0}, {2, 0}, psi);
    CHECK(r.l_mix[0] == 0.5);
    const SectionRewards skew = beach_section_rewards({3, 0}, {1, 0}, psi);
    CHECK(skew.l_mix[0] == doctest::Approx(0.25));
  }
  SUBCASE("global rewards sum the sections") {
    const SectionRewards r = beach_section_rewards({3, 1}, {1, 1}, psi);
    CHECK(r.g_cap == doctest::Approx(r.l_cap[0] + r.l_cap[1]).epsilon(1e-12));
    CHECK(r.g_mix == doctest::Approx(r.l_mix[0] + r.l_mix[1]).epsilon(1e-12));
  }
}

TEST_CASE("beach steps pay only at the horizon and clamp at the ends") {
  BeachConfig config;
  config.n_agents = 4;
  config.type_a_count = 2;
  config.sections = 3;
  config.capacity = 1.0;
  config.horizon = 3;
  config.start_section_even = 0;
  config.start_section_odd = 2;
  BeachEnv env(config);
  env.reset(0);

  // Everyone pushes left; the leftmost agents stay pinned at section 0.
  StepOutput out = env.step(uniform_actions(env, 0));
  for (const auto& [agent, reward] : out.rewards) CHECK(reward == ObjectiveVector{0.0, 0.0});
  CHECK(env.position_of(0) == 0);
  CHECK(env.position_of(1) == 1);

  out = env.step(uniform_actions(env, 0));
  for (const auto& [agent, reward] : out.rewards) CHECK(reward == ObjectiveVector{0.0, 0.0});

  out = env.step(uniform_actions(env, 0));  // final step pays
  for (const auto& [agent, term] : out.terminations) CHECK(term);
  // All four agents sit on section 0: x_b = 4, psi = 1, mix = 2/4.
  const double cap = 4.0 * std::exp(-4.0);
  for (const auto& [agent, reward] : out.rewards) {
    CHECK(reward[0] == doctest::Approx(cap).epsilon(1e-12));
    CHECK(reward[1] == doctest::Approx(0.5));
  }
  for (const auto& [agent, info] : out.infos) {
    CHECK(info.at("g_cap") == doctest::Approx(cap).epsilon(1e-12));
    CHECK(info.at("g_mix") == doctest::Approx(0.5));
  }
}

TEST_CASE("beach occupancy always sums to the agent count") {
  BeachConfig config;
  config.n_agents = 10;
  config.type_a_count = 6;
  BeachEnv env(config);
  env.reset(0);
  Rng rng(17);
  while (!env.agents().empty()) {
    AgentMap<Action> actions;
    for (const auto& agent : env.agents()) actions[agent] = rng.next_int(3);
    env.step(actions);
    int total = 0;
    std::vector<int> per_section(5, 0);
    for (int i = 0; i < 10; ++i) per_section[static_cast<std::size_t>(env.position_of(i))]++;
    for (int c : per_section) total += c;
    CHECK(total == 10);
  }
}

TEST_CASE("beach reward modes: team vectors identical, individual per section") {
  for (bool team : {true, false}) {
    BeachConfig config;
    config.n_agents = 6;
    config.type_a_count = 3;
    config.horizon = 1;
    config.team_reward = team;
    BeachEnv env(config);
    env.reset(0);
    const StepOutput out = env.step(uniform_actions(env, 1));
    if (team) {
      const ObjectiveVector first = out.rewards.begin()->second;
      for (const auto& [agent, reward] : out.rewards) CHECK(reward == first);
    } else {
      // Agents on the same section share a local reward vector.
      std::map<int, ObjectiveVector> by_section;
      int index = 0;
      for (const auto& [agent, reward] : out.rewards) {
        const int section = env.position_of(index++);
        if (by_section.count(section)) CHECK(by_section[section] == reward);
        by_section[section] = reward;
      }
      CHECK(by_section.size() > 1);
    }
  }
}

TEST_CASE("the published 50-agent study setup loads from config text") {
  const IniFile ini = IniFile::parse(
      "[experiment]\nenv = beach\n[env]\nagents = 50\ntype_a = 35\nsections = 5\n"
      "capacity = 3\nreward_mode = team\ncompat_observation = false\n");
  std::unique_ptr<Env> env = make_env("beach", ini);
  CHECK(env->possible_agents().size() == 50);
  const auto* beach = dynamic_cast<const BeachEnv*>(env.get());
  REQUIRE(beach != nullptr);
  CHECK(beach->config().type_a_count == 35);
  CHECK(beach->config().capacities == std::vector<double>(5, 3.0));
  env->reset(0);
  int on_one = 0, on_three = 0;
  for (int i = 0; i < 50; ++i) {
    if (beach->position_of(i) == 1) ++on_one;
    if (beach->position_of(i) == 3) ++on_three;
  }
  CHECK(on_one == 25);
  CHECK(on_three == 25);
}

TEST_CASE("beach compat observation compresses to section and type") {
  BeachConfig config;
  config.n_agents = 4;
  config.type_a_count = 2;
  BeachEnv raw_probe(config);

  BeachCompatObservation env(std::make_unique<BeachEnv>(config));
  CHECK(env.observation_space("any").as_discrete().n == 10);  // 5 sections x 2 types

  const ResetOutput out = env.reset(0);
  raw_probe.reset(0);
  int index = 0;
  for (const auto& [agent, obs] : out.observations) {
    const auto code = std::get<std::int64_t>(obs);
    CHECK(code == raw_probe.position_of(index) * 2 + raw_probe.agent_type(index));
    ++index;
  }

  // The default observation carries 2 + 2 * sections entries.
  BeachEnv raw(config);
  const ResetOutput raw_out = raw.reset(0);
  CHECK(std::get<std::vector<double>>(raw_out.observations.begin()->second).size() == 12);

  // Observation-only: rewards pass through untouched.
  BeachEnv mirror(config);
  mirror.reset(0);
  env.reset(0);
  for (int t = 0; t < config.horizon; ++t) {
    const StepOutput a = mirror.step(uniform_actions(mirror, 1));
    const StepOutput b = env.step(uniform_actions(env, 1));
    CHECK(a.rewards == b.rewards);
  }
}

TEST_CASE("item gathering collects items once with the documented rewards") {
  GatherConfig config;
  config.width = 3;
  config.height = 3;
  config.n_agents = 2;
  config.colours = 3;
  config.horizon = 5;
  config.team_reward = false;
  config.layout_text = "A3.\n...\nB..";  // colour 3 next to agent A

  ItemGatheringEnv env(config);
  env.reset(0);
  AgentMap<Action> actions;
  actions["gatherer_0"] = std::int64_t{3};  // right, onto the colour-3 item
  actions["gatherer_1"] = std::int64_t{4};  // stay
  StepOutput out = env.step(actions);
  CHECK(out.rewards.at("gatherer_0") == ObjectiveVector{0, 0, 1});
  CHECK(out.rewards.at("gatherer_1") == ObjectiveVector{0, 0, 0});
  CHECK(env.items_remaining() == 0);
  for (const auto& [agent, term] : out.terminations) CHECK(term);

  // Team mode credits everyone for the same event.
  config.team_reward = true;
  ItemGatheringEnv team(config);
  team.reset(0);
  out = team.step(actions);
  CHECK(out.rewards.at("gatherer_0") == ObjectiveVector{0, 0, 1});
  CHECK(out.rewards.at("gatherer_1") == ObjectiveVector{0, 0, 1});

  // No contact: zero vectors.
  ItemGatheringEnv idle(config);
  idle.reset(0);
  AgentMap<Action> stay;
  stay["gatherer_0"] = std::int64_t{4};
  stay["gatherer_1"] = std::int64_t{4};
  out = idle.step(stay);
  CHECK(out.rewards.at("gatherer_0") == ObjectiveVector{0, 0, 0});
}

TEST_CASE("simultaneous entry awards the lowest-index agent") {
  GatherConfig config;
  config.width = 3;
  config.height = 3;
  config.n_agents = 2;
  config.colours = 2;
  config.horizon = 4;
  config.team_reward = false;
  config.layout_text = "A1B\n...\n...";  // both flank the colour-1 item

  ItemGatheringEnv env(config);
  env.reset(0);
  AgentMap<Action> actions;
  actions["gatherer_0"] = std::int64_t{3};  // right
  actions["gatherer_1"] = std::int64_t{2};  // left
  const StepOutput out = env.step(actions);
  CHECK(out.rewards.at("gatherer_0") == ObjectiveVector{1, 0});
  CHECK(out.rewards.at("gatherer_1") == ObjectiveVector{0, 0});
}

TEST_CASE("gathering conservation over random playouts") {
  GatherConfig config;
  config.width = 5;
  config.height = 4;
  config.n_agents = 3;
  config.colours = 3;
  config.items_per_colour = 2;
  config.horizon = 30;
  config.team_reward = false;
  config.layout_seed = 5;
  ItemGatheringEnv env(config);
  Rng rng(23);
  for (int episode = 0; episode < 20; ++episode) {
    env.reset(static_cast<Seed>(episode));
    const int initial = env.items_remaining();
    ObjectiveVector collected(3, 0.0);
    while (!env.agents().empty()) {
      AgentMap<Action> actions;
      for (const auto& agent : env.agents()) actions[agent] = rng.next_int(5);
      const StepOutput out = env.step(actions);
      for (const auto& [agent, reward] : out.rewards) collected += reward;
    }
    double total = 0.0;
    for (double c : collected) total += c;
    CHECK(total + env.items_remaining() == initial);
  }
}

TEST_CASE("team gathering pays identical vectors each step") {
  GatherConfig config = testing::tiny_gather_fixture();
  ItemGatheringEnv env(config);
  env.reset(0);
  Rng rng(31);
  while (!env.agents().empty()) {
    AgentMap<Action> actions;
    for (const auto& agent : env.agents()) actions[agent] = rng.next_int(5);
    const StepOutput out = env.step(actions);
    const ObjectiveVector first = out.rewards.begin()->second;
    for (const auto& [agent, reward] : out.rewards) CHECK(reward == first);
  }
}

TEST_SUITE_END();
