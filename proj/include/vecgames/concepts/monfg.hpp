#pragma once

#include <map>
#include <vector>

#include "vecgames/concepts/dominance.hpp"
#include "vecgames/concepts/scalarise.hpp"

namespace vecgames {

// Multi-objective normal-form game: n >= 2 agents, one payoff matrix per
// joint action. Joint actions index the flattened tensor with agent 0 as the
// most significant digit.
class Monfg {
 public:
  Monfg(std::vector<int> action_counts, int objectives);

  int agents() const { return static_cast<int>(action_counts_.size()); }
  int objectives() const { return objectives_; }
  const std::vector<int>& action_counts() const { return action_counts_; }

  std::size_t joint_count() const { return payoffs_.size(); }
  std::size_t flat_index(const std::vector<int>& joint) const;

  void set_payoff(const std::vector<int>& joint, ValueMatrix value);
  const ValueMatrix& payoff(const std::vector<int>& joint) const;

 private:
  std::vector<int> action_counts_;
  int objectives_;
  std::vector<ValueMatrix> payoffs_;
};

struct NashReport {
  bool is_equilibrium = false;
  // For every agent with a profitable deviation: the max-gain alternative.
  std::map<int, int> best_deviations;
};

// Pure-strategy equilibrium check under linear utilities: the joint action is
// an equilibrium when no agent can raise w_i . v_i by more than `tolerance`
// with a unilateral action change.
NashReport check_nash(const Monfg& game, const std::vector<WeightVector>& utilities,
                      const std::vector<int>& joint, double tolerance = 1e-9);

}  // namespace vecgames
