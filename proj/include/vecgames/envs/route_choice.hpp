#pragma once

#include <string>
#include <vector>

#include "vecgames/core/env.hpp"

namespace vecgames {

// Directed road segment with affine time cost a*x + b in the edge flow x.
struct RoadEdge {
  std::string from;
  std::string to;
  double a = 0.0;
  double b = 0.0;
  bool tolled = true;  // takes part in the selected-tolling mode
};

struct RouteDef {
  int od_index = 0;
  std::vector<int> edges;  // indices into RoadNetwork::edges, a connected path
};

enum class TollMode { None, Marginal, Selected };

struct RoadNetwork {
  std::vector<RoadEdge> edges;
  std::vector<RouteDef> routes;

  int od_pairs() const;
  std::vector<std::vector<int>> routes_by_od() const;
  void validate() const;
};

// Marginal-cost toll x * c'(x) = a * x for affine edge costs.
double marginal_toll(const RoadEdge& edge, double flow);

// Braess paradox instance: routes s-v-t, s-w-t and the shortcut s-v-w-t.
// Coefficients are scaled by the population so that everyone on the shortcut
// walks away with a travel time of 18 while the even split over the two outer
// routes achieves the optimum of 15.
RoadNetwork braess_network(int n_agents);

// Parses the plain-text network format documented in the README ("edges" /
// "routes" sections).
RoadNetwork parse_network(const std::string& text);

// Per-agent (time, money) costs for one joint route assignment; tolls follow
// the given mode. route_per_agent[i] indexes the route set of od_per_agent[i].
struct RouteCosts {
  std::vector<double> time;
  std::vector<double> money;
};
RouteCosts route_costs(const RoadNetwork& net, const std::vector<int>& od_per_agent,
                       const std::vector<int>& route_per_agent, TollMode tolls);

// One-shot congestion game; rewards are negated costs so that higher is
// better: (-time, -money).
class RouteChoiceEnv : public EnvBase {
 public:
  RouteChoiceEnv(RoadNetwork network, int n_agents, TollMode tolls = TollMode::Marginal,
                 double selected_fraction = 0.5, Seed selection_seed = 0);

  std::string id() const override { return "route_choice"; }
  int num_objectives() const override { return 2; }
  const Space& observation_space(const AgentId& agent) const override;
  const Space& action_space(const AgentId& agent) const override;
  ResetOutput reset(Seed seed) override;
  StepOutput step(const AgentMap<Action>& actions) override;
  std::unique_ptr<Env> clone() const override;
  std::uint64_t state_fingerprint() const override;
  std::optional<RewardBounds> reward_bounds() const override;

  const RoadNetwork& network() const { return network_; }
  int od_of_agent(int agent_index) const { return od_per_agent_[static_cast<std::size_t>(agent_index)]; }

 private:
  RoadNetwork network_;
  TollMode tolls_;
  std::vector<std::vector<int>> od_routes_;
  std::vector<int> od_per_agent_;
  Space observation_space_;
  std::vector<Space> action_spaces_;  // per OD pair
  std::map<AgentId, int> agent_index_;
  bool stepped_ = false;
};

}  // namespace vecgames
