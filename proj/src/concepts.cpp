#include <cmath>
#include <numeric>

#include "vecgames/concepts/monfg.hpp"
#include "vecgames/core/errors.hpp"

namespace vecgames {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) raise(Errc::InvalidWeights, "weight vector is empty");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w))
      raise(Errc::InvalidWeights, "weights must be finite and non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) raise(Errc::InvalidWeights, "weights must sum to 1");
}

double WeightVector::utility(const ObjectiveVector& v) const { return dot(weights_, v); }

ObjectiveVector mean_vector(const std::vector<ObjectiveVector>& vectors) {
  if (vectors.empty()) raise(Errc::EmptyReturns, "no vectors to average");
  ObjectiveVector mean(vectors.front().size(), 0.0);
  for (const auto& v : vectors) mean += v;
  for (double& x : mean) x /= static_cast<double>(vectors.size());
  return mean;
}

double scalarise_returns(const std::vector<ObjectiveVector>& episode_returns,
                         const WeightVector& w, Criterion criterion) {
  if (episode_returns.empty()) raise(Errc::EmptyReturns, "no episode returns");
  if (criterion == Criterion::SER) return w.utility(mean_vector(episode_returns));
  double total = 0.0;
  for (const auto& v : episode_returns) total += w.utility(v);
  return total / static_cast<double>(episode_returns.size());
}

Monfg::Monfg(std::vector<int> action_counts, int objectives)
    : action_counts_(std::move(action_counts)), objectives_(objectives) {
  if (action_counts_.size() < 2) raise(Errc::InvalidCounts, "a MONFG needs n >= 2 agents");
  if (objectives_ < 1) raise(Errc::InvalidCounts, "a MONFG needs d >= 1 objectives");
  std::size_t total = 1;
  for (int count : action_counts_) {
    if (count < 1) raise(Errc::InvalidCounts, "action counts must be positive");
    total *= static_cast<std::size_t>(count);
  }
  ValueMatrix zero;
  zero.rows.assign(action_counts_.size(),
                   ObjectiveVector(static_cast<std::size_t>(objectives_), 0.0));
  payoffs_.assign(total, zero);
}

std::size_t Monfg::flat_index(const std::vector<int>& joint) const {
  if (joint.size() != action_counts_.size())
    raise(Errc::InvalidJointAction, "joint action has the wrong arity");
  std::size_t index = 0;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (joint[i] < 0 || joint[i] >= action_counts_[i])
      raise(Errc::InvalidJointAction, "action index out of range");
    index = index * static_cast<std::size_t>(action_counts_[i]) +
            static_cast<std::size_t>(joint[i]);
  }
  return index;
}

void Monfg::set_payoff(const std::vector<int>& joint, ValueMatrix value) {
  if (value.agents() != action_counts_.size() ||
      static_cast<int>(value.objectives()) != objectives_)
    raise(Errc::ShapeMismatch, "payoff matrix shape does not match the game");
  payoffs_[flat_index(joint)] = std::move(value);
}

const ValueMatrix& Monfg::payoff(const std::vector<int>& joint) const {
  return payoffs_[flat_index(joint)];
}

NashReport check_nash(const Monfg& game, const std::vector<WeightVector>& utilities,
                      const std::vector<int>& joint, double tolerance) {
  if (static_cast<int>(utilities.size()) != game.agents())
    raise(Errc::UtilityCountMismatch, "one utility per agent required");
  const ValueMatrix& base = game.payoff(joint);

  NashReport report;
  report.is_equilibrium = true;
  for (int i = 0; i < game.agents(); ++i) {
    const double current = utilities[static_cast<std::size_t>(i)].utility(
        base.rows[static_cast<std::size_t>(i)]);
    double best_gain = 0.0;
    int best_action = -1;
    std::vector<int> deviated = joint;
    for (int a = 0; a < game.action_counts()[static_cast<std::size_t>(i)]; ++a) {
      if (a == joint[static_cast<std::size_t>(i)]) continue;
      deviated[static_cast<std::size_t>(i)] = a;
      const double value = utilities[static_cast<std::size_t>(i)].utility(
          game.payoff(deviated).rows[static_cast<std::size_t>(i)]);
      const double gain = value - current;
      if (gain > best_gain) {
        best_gain = gain;
        best_action = a;
      }
    }
    if (best_gain > tolerance) {
      report.is_equilibrium = false;
      report.best_deviations[i] = best_action;
    }
  }
  return report;
}

}  // namespace vecgames
