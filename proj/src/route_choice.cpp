#include "vecgames/envs/route_choice.hpp"

#include <algorithm>
#include <sstream>

namespace vecgames {

int RoadNetwork::od_pairs() const {
  int highest = -1;
  for (const auto& route : routes) highest = std::max(highest, route.od_index);
  return highest + 1;
}

std::vector<std::vector<int>> RoadNetwork::routes_by_od() const {
  std::vector<std::vector<int>> by_od(static_cast<std::size_t>(od_pairs()));
  for (std::size_t r = 0; r < routes.size(); ++r) {
    by_od[static_cast<std::size_t>(routes[r].od_index)].push_back(static_cast<int>(r));
  }
  return by_od;
}

void RoadNetwork::validate() const {
  if (routes.empty()) raise(Errc::InvalidRoute, "network has no routes");
  std::vector<std::pair<std::string, std::string>> od_ends(
      static_cast<std::size_t>(od_pairs()), {"", ""});
  for (const auto& route : routes) {
    if (route.edges.empty()) raise(Errc::InvalidRoute, "empty route");
    if (route.od_index < 0) raise(Errc::InvalidRoute, "negative OD index");
    for (std::size_t i = 0; i < route.edges.size(); ++i) {
      const int e = route.edges[i];
      if (e < 0 || e >= static_cast<int>(edges.size()))
        raise(Errc::InvalidRoute, "route references an unknown edge");
      if (i > 0) {
        const auto& prev = edges[static_cast<std::size_t>(route.edges[i - 1])];
        if (prev.to != edges[static_cast<std::size_t>(e)].from)
          raise(Errc::InvalidRoute, "route edges are not a connected path");
      }
    }
    auto& ends = od_ends[static_cast<std::size_t>(route.od_index)];
    const std::string& start = edges[static_cast<std::size_t>(route.edges.front())].from;
    const std::string& finish = edges[static_cast<std::size_t>(route.edges.back())].to;
    if (ends.first.empty()) {
      ends = {start, finish};
    } else if (ends.first != start || ends.second != finish) {
      raise(Errc::InvalidRoute, "routes of one OD pair have different endpoints");
    }
  }
  for (const auto& edge : edges) {
    if (edge.a < 0.0 || edge.b < 0.0)
      raise(Errc::InvalidRoute, "edge cost coefficients must be non-negative");
  }
}

double marginal_toll(const RoadEdge& edge, double flow) { return edge.a * flow; }

RoadNetwork braess_network(int n_agents) {
  if (n_agents < 2) raise(Errc::InvalidLimits, "need at least 2 agents");
  // Scaled so that everyone on the shortcut route rides for 18 time units
  // while the even split over the two outer routes takes 15 (a = 3/1400 at
  // the default population of 4200).
  const double a = 9.0 / static_cast<double>(n_agents);
  RoadNetwork net;
  net.edges = {
      {"s", "v", a, 0.0, true},     // 0: variable approach
      {"v", "t", 0.0, 10.5, true},  // 1: constant leg
      {"s", "w", 0.0, 10.5, true},  // 2: constant leg
      {"w", "t", a, 0.0, true},     // 3: variable approach
      {"v", "w", 0.0, 0.0, true},   // 4: free shortcut
  };
  net.routes = {
      {0, {0, 1}},     // s-v-t
      {0, {2, 3}},     // s-w-t
      {0, {0, 4, 3}},  // s-v-w-t
  };
  net.validate();
  return net;
}

RoadNetwork parse_network(const std::string& text) {
  RoadNetwork net;
  std::istringstream in(text);
  std::string line;
  enum class Section { None, Edges, Routes } section = Section::None;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "edges") {
      section = Section::Edges;
      continue;
    }
    if (first == "routes") {
      section = Section::Routes;
      continue;
    }
    if (section == Section::Edges) {
      RoadEdge edge;
      edge.from = first;
      if (!(fields >> edge.to >> edge.a >> edge.b))
        raise(Errc::FileInvalid, "line " + std::to_string(line_no) + ": expected 'from to a b'");
      net.edges.push_back(std::move(edge));
    } else if (section == Section::Routes) {
      RouteDef route;
      route.od_index = std::stoi(first);
      int edge_index = 0;
      while (fields >> edge_index) route.edges.push_back(edge_index);
      if (route.edges.empty())
        raise(Errc::FileInvalid,
              "line " + std::to_string(line_no) + ": expected 'od_index edge...'");
      net.routes.push_back(std::move(route));
    } else {
      raise(Errc::FileInvalid, "content before an 'edges' or 'routes' section header");
    }
  }
  net.validate();
  return net;
}

RouteCosts route_costs(const RoadNetwork& net, const std::vector<int>& od_per_agent,
                       const std::vector<int>& route_per_agent, TollMode tolls) {
  if (od_per_agent.size() != route_per_agent.size())
    raise(Errc::InvalidRoute, "one route per agent required");
  const auto by_od = net.routes_by_od();

  std::vector<int> chosen(route_per_agent.size());
  std::vector<double> flow(net.edges.size(), 0.0);
  for (std::size_t i = 0; i < route_per_agent.size(); ++i) {
    const auto& options = by_od[static_cast<std::size_t>(od_per_agent[i])];
    const int pick = route_per_agent[i];
    if (pick < 0 || pick >= static_cast<int>(options.size()))
      raise(Errc::InvalidRoute, "route index outside the agent's route set");
    chosen[i] = options[static_cast<std::size_t>(pick)];
    for (int e : net.routes[static_cast<std::size_t>(chosen[i])].edges)
      flow[static_cast<std::size_t>(e)] += 1.0;
  }

  RouteCosts costs;
  costs.time.resize(route_per_agent.size());
  costs.money.resize(route_per_agent.size());
  for (std::size_t i = 0; i < route_per_agent.size(); ++i) {
    double time = 0.0;
    double money = 0.0;
    for (int e : net.routes[static_cast<std::size_t>(chosen[i])].edges) {
      const RoadEdge& edge = net.edges[static_cast<std::size_t>(e)];
      const double x = flow[static_cast<std::size_t>(e)];
      time += edge.a * x + edge.b;
      if (tolls == TollMode::Marginal || (tolls == TollMode::Selected && edge.tolled))
        money += marginal_toll(edge, x);
    }
    costs.time[i] = time;
    costs.money[i] = money;
  }
  return costs;
}

RouteChoiceEnv::RouteChoiceEnv(RoadNetwork network, int n_agents, TollMode tolls,
                               double selected_fraction, Seed selection_seed)
    : network_(std::move(network)), tolls_(tolls), observation_space_(Space::discrete(1)) {
  network_.validate();
  if (n_agents < 2) raise(Errc::InvalidLimits, "need at least 2 agents");
  od_routes_ = network_.routes_by_od();
  for (const auto& routes : od_routes_) {
    if (routes.empty()) raise(Errc::InvalidRoute, "an OD pair has no routes");
    action_spaces_.push_back(Space::discrete(static_cast<std::int64_t>(routes.size())));
  }

  std::vector<AgentId> names;
  const int od_count = static_cast<int>(od_routes_.size());
  for (int i = 0; i < n_agents; ++i) {
    names.push_back(indexed_agent_name("driver_", i, n_agents));
    od_per_agent_.push_back(i % od_count);  // round-robin over OD pairs
    agent_index_[names.back()] = i;
  }
  set_possible_agents(std::move(names));

  if (tolls_ == TollMode::Selected) {
    Rng pick = derive_stream(selection_seed, 3);
    for (auto& edge : network_.edges) edge.tolled = pick.bernoulli(selected_fraction);
  }
}

const Space& RouteChoiceEnv::observation_space(const AgentId&) const {
  return observation_space_;
}

const Space& RouteChoiceEnv::action_space(const AgentId& agent) const {
  auto it = agent_index_.find(agent);
  if (it == agent_index_.end()) raise(Errc::UnknownAgent, "no driver named " + agent);
  return action_spaces_[static_cast<std::size_t>(od_per_agent_[static_cast<std::size_t>(it->second)])];
}

ResetOutput RouteChoiceEnv::reset(Seed) {
  stepped_ = false;
  mark_reset();
  ResetOutput out;
  for (const auto& agent : agents()) {
    out.observations[agent] = std::int64_t{0};
    out.infos[agent] = Info{};
  }
  return out;
}

StepOutput RouteChoiceEnv::step(const AgentMap<Action>& actions) {
  check_actions(actions);
  std::vector<int> picks;
  picks.reserve(possible_agents().size());
  for (const auto& agent : possible_agents())
    picks.push_back(static_cast<int>(std::get<std::int64_t>(actions.at(agent))));

  const RouteCosts costs = route_costs(network_, od_per_agent_, picks, tolls_);
  stepped_ = true;

  StepOutput out;
  const auto& all = possible_agents();
  for (std::size_t i = 0; i < all.size(); ++i) {
    out.observations.emplace_hint(out.observations.end(), all[i], std::int64_t{0});
    out.rewards.emplace_hint(out.rewards.end(), all[i],
                             ObjectiveVector{-costs.time[i], -costs.money[i]});
    out.terminations.emplace_hint(out.terminations.end(), all[i], true);
    out.truncations.emplace_hint(out.truncations.end(), all[i], false);
    out.infos.emplace_hint(out.infos.end(), all[i],
                           Info{{"travel_time", costs.time[i]}, {"toll", costs.money[i]}});
  }
  if (debug_validation()) validate_output(out);
  retire_finished(out);
  return out;
}

std::unique_ptr<Env> RouteChoiceEnv::clone() const {
  return std::make_unique<RouteChoiceEnv>(*this);
}

std::uint64_t RouteChoiceEnv::state_fingerprint() const {
  Fnv1a hash;
  hash.add(static_cast<std::uint64_t>(stepped_ ? 1 : 0));
  return hash.value;
}

std::optional<RewardBounds> RouteChoiceEnv::reward_bounds() const {
  // Worst case: every agent on the longest route at full congestion.
  const double n = static_cast<double>(possible_agents().size());
  double worst_time = 0.0;
  for (const auto& route : network_.routes) {
    double t = 0.0;
    for (int e : route.edges) {
      const auto& edge = network_.edges[static_cast<std::size_t>(e)];
      t += edge.a * n + edge.b;
    }
    worst_time = std::max(worst_time, t);
  }
  RewardBounds bounds;
  bounds.low = {-worst_time, -worst_time};
  bounds.high = {0.0, 0.0};
  return bounds;
}

}  // namespace vecgames
