#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace vecgames {

// Short text identifier, unique within an environment and stable across resets.
using AgentId = std::string;

// Fixed-length vector of per-objective rewards, one entry per objective.
using ObjectiveVector = std::vector<double>;

// Observations and actions are either a discrete index or a real-valued vector,
// matching the Discrete/Box space the agent declares.
using Observation = std::variant<std::int64_t, std::vector<double>>;
using Action = std::variant<std::int64_t, std::vector<double>>;

// Per-agent step annotations (named scalar metrics such as travel time).
using Info = std::map<std::string, double>;

template <typename T>
using AgentMap = std::map<AgentId, T>;

using Seed = std::uint64_t;

struct ResetOutput {
  AgentMap<Observation> observations;
  AgentMap<Info> infos;
};

// The five maps always share one key set: the agents active before the step.
struct StepOutput {
  AgentMap<Observation> observations;
  AgentMap<ObjectiveVector> rewards;
  AgentMap<bool> terminations;
  AgentMap<bool> truncations;
  AgentMap<Info> infos;
};

bool all_finite(const ObjectiveVector& v);

ObjectiveVector& operator+=(ObjectiveVector& lhs, const ObjectiveVector& rhs);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace vecgames
