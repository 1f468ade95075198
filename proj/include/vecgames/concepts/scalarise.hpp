#pragma once

#include <vector>

#include "vecgames/core/types.hpp"

namespace vecgames {

// Non-negative weights summing to one, parameterising a linear utility.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> weights);  // validates the simplex invariants

  const std::vector<double>& values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  double utility(const ObjectiveVector& v) const;

  bool operator==(const WeightVector& other) const { return weights_ == other.weights_; }
  bool operator<(const WeightVector& other) const { return weights_ < other.weights_; }

 private:
  std::vector<double> weights_;
};

enum class Criterion { SER, ESR };

// SER applies the utility to the mean return vector; ESR averages the
// per-episode utilities. The two coincide for linear utilities.
double scalarise_returns(const std::vector<ObjectiveVector>& episode_returns,
                         const WeightVector& w, Criterion criterion);

ObjectiveVector mean_vector(const std::vector<ObjectiveVector>& vectors);

}  // namespace vecgames
