#include <algorithm>
#include <cmath>
#include <string>
#include <cstring>
#include <sstream>

#include "vecgames/core/env.hpp"

namespace vecgames {

bool all_finite(const ObjectiveVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

ObjectiveVector& operator+=(ObjectiveVector& lhs, const ObjectiveVector& rhs) {
  if (lhs.empty()) {
    lhs = rhs;
    return lhs;
  }
  if (lhs.size() != rhs.size()) raise(Errc::LengthMismatch, "objective vector sizes differ");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
  return lhs;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) raise(Errc::LengthMismatch, "dot of vectors with different sizes");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MissingAgentAction: return "MissingAgentAction";
    case Errc::OutOfSpaceAction: return "OutOfSpaceAction";
    case Errc::SteppedTerminalEnv: return "SteppedTerminalEnv";
    case Errc::ActionGivenForTerminatedAgent: return "ActionGivenForTerminatedAgent";
    case Errc::UnknownAgent: return "UnknownAgent";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidJointAction: return "InvalidJointAction";
    case Errc::UtilityCountMismatch: return "UtilityCountMismatch";
    case Errc::EmptyReturns: return "EmptyReturns";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyFront: return "EmptyFront";
    case Errc::EmptyWeights: return "EmptyWeights";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::WeightLengthMismatch: return "WeightLengthMismatch";
    case Errc::UnsupportedSpace: return "UnsupportedSpace";
    case Errc::InvalidLimits: return "InvalidLimits";
    case Errc::IllegalMineChoice: return "IllegalMineChoice";
    case Errc::InvalidRoute: return "InvalidRoute";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::OutOfBoxAction: return "OutOfBoxAction";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::FullColumn: return "FullColumn";
    case Errc::GameOver: return "GameOver";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::GroupTooSmall: return "GroupTooSmall";
    case Errc::NonDiscreteObservation: return "NonDiscreteObservation";
    case Errc::NonDiscreteAction: return "NonDiscreteAction";
    case Errc::NotTeamReward: return "NotTeamReward";
    case Errc::InvalidCounts: return "InvalidCounts";
    case Errc::SpaceTooLarge: return "SpaceTooLarge";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::FileInvalid: return "FileInvalid";
    case Errc::RuntimeFailure: return "RuntimeFailure";
  }
  return "UnknownError";
}

Space::Space(DiscreteSpace d) : value_(d) {
  if (d.n < 1) raise(Errc::InvalidCounts, "Discrete space needs n >= 1");
}

Space::Space(BoxSpace b) : value_(std::move(b)) {
  const auto& box = std::get<BoxSpace>(value_);
  if (box.low.size() != box.high.size())
    raise(Errc::ShapeMismatch, "Box low/high lengths differ");
  for (std::size_t i = 0; i < box.low.size(); ++i) {
    if (!(box.low[i] <= box.high[i])) raise(Errc::ShapeMismatch, "Box low > high");
  }
}

Space Space::box(std::vector<double> low, std::vector<double> high) {
  return Space(BoxSpace{std::move(low), std::move(high)});
}

bool Space::contains(const Action& value) const {
  if (is_discrete()) {
    const auto* idx = std::get_if<std::int64_t>(&value);
    return idx != nullptr && *idx >= 0 && *idx < as_discrete().n;
  }
  const auto* vec = std::get_if<std::vector<double>>(&value);
  if (vec == nullptr) return false;
  const auto& box = as_box();
  if (vec->size() != box.low.size()) return false;
  for (std::size_t i = 0; i < vec->size(); ++i) {
    if (!((*vec)[i] >= box.low[i] && (*vec)[i] <= box.high[i])) return false;
  }
  return true;
}

bool Space::is_tabular() const {
  if (is_discrete()) return true;
  const auto& box = as_box();
  for (std::size_t i = 0; i < box.low.size(); ++i) {
    if (!std::isfinite(box.low[i]) || !std::isfinite(box.high[i])) return false;
    if (box.low[i] != std::floor(box.low[i]) || box.high[i] != std::floor(box.high[i]))
      return false;
  }
  return true;
}

std::string Space::describe() const {
  std::ostringstream out;
  if (is_discrete()) {
    out << "Discrete(" << as_discrete().n << ")";
  } else {
    out << "Box(" << as_box().low.size() << ")";
  }
  return out.str();
}

void EnvBase::check_actions(const AgentMap<Action>& actions) const {
  require_not_terminal();
  for (const auto& agent : agents()) {
    auto it = actions.find(agent);
    if (it == actions.end())
      raise(Errc::MissingAgentAction, "no action for active agent " + agent);
    if (!action_space(agent).contains(it->second))
      raise(Errc::OutOfSpaceAction, "action outside the space of agent " + agent);
  }
  if (actions.size() != agents().size())
    raise(Errc::UnknownAgent, "actions given for agents that are not active");
}

void EnvBase::retire_finished(const StepOutput& out) {
  std::vector<AgentId> still_active;
  for (const auto& agent : agents()) {
    bool finished = out.terminations.at(agent) || out.truncations.at(agent);
    if (!finished) still_active.push_back(agent);
  }
  // EnvBase keeps active_agents_ private; rebuild through the setter path.
  active_agents_ = std::move(still_active);
}

void EnvBase::validate_output(const StepOutput& out) const {
  const int d = num_objectives();
  for (const auto& [agent, reward] : out.rewards) {
    if (static_cast<int>(reward.size()) != d)
      raise(Errc::LengthMismatch, "reward length != objective count for " + agent);
    if (!all_finite(reward)) raise(Errc::RuntimeFailure, "non-finite reward for " + agent);
    if (!observation_space(agent).contains(out.observations.at(agent)))
      raise(Errc::RuntimeFailure, "observation outside declared space for " + agent);
  }
  auto same_keys = [&](const auto& m) { return m.size() == out.rewards.size(); };
  if (!same_keys(out.observations) || !same_keys(out.terminations) ||
      !same_keys(out.truncations) || !same_keys(out.infos))
    raise(Errc::RuntimeFailure, "StepOutput maps have inconsistent key sets");
}

std::string indexed_agent_name(const char* prefix, int index, int count) {
  int digits = 1;
  for (int v = count - 1; v >= 10; v /= 10) ++digits;
  std::string number = std::to_string(index);
  return std::string(prefix) +
         std::string(static_cast<std::size_t>(digits) - number.size(), '0') + number;
}

void Fnv1a::add(double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof(bits));
  add(bits);
}

}  // namespace vecgames
