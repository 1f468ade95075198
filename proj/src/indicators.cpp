#include "vecgames/indicators/indicators.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "vecgames/concepts/dominance.hpp"
#include "vecgames/core/errors.hpp"

namespace vecgames {

std::size_t cardinality(const std::vector<ObjectiveVector>& front) {
  std::set<ObjectiveVector> distinct(front.begin(), front.end());
  return distinct.size();
}

namespace {

// Points are projections onto the first `dims` objectives; all weakly
// dominate the reference prefix.
double sweep(std::vector<std::vector<double>> points, const ObjectiveVector& ref,
             std::size_t dims) {
  if (points.empty()) return 0.0;
  if (dims == 1) {
    double best = ref[0];
    for (const auto& p : points) best = std::max(best, p[0]);
    return best - ref[0];
  }
  const std::size_t axis = dims - 1;
  std::sort(points.begin(), points.end(),
            [axis](const auto& a, const auto& b) { return a[axis] > b[axis]; });
  double volume = 0.0;
  std::vector<std::vector<double>> slice;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<double> projected(points[i].begin(), points[i].begin() + axis);
    // Keep the slice non-dominated so the recursion stays small.
    bool dominated = false;
    for (const auto& q : slice) {
      if (weakly_dominates(q, projected)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      slice.erase(std::remove_if(slice.begin(), slice.end(),
                                 [&](const auto& q) { return weakly_dominates(projected, q); }),
                  slice.end());
      slice.push_back(std::move(projected));
    }
    const double lower = (i + 1 < points.size()) ? points[i + 1][axis] : ref[axis];
    const double depth = points[i][axis] - lower;
    if (depth > 0.0) volume += depth * sweep(slice, ref, axis);
  }
  return volume;
}

}  // namespace

double hypervolume(const std::vector<ObjectiveVector>& front, const ObjectiveVector& ref) {
  std::vector<std::vector<double>> contributing;
  for (const auto& p : front) {
    if (p.size() != ref.size())
      raise(Errc::DimensionMismatch, "front point and reference point lengths differ");
    if (weakly_dominates(p, ref)) contributing.push_back(p);
  }
  return sweep(std::move(contributing), ref, ref.size());
}

double expected_utility(const std::vector<ObjectiveVector>& front,
                        const std::vector<WeightVector>& weights) {
  if (front.empty()) raise(Errc::EmptyFront, "expected utility of an empty front");
  if (weights.empty()) raise(Errc::EmptyWeights, "expected utility needs weights");
  double total = 0.0;
  for (const auto& w : weights) {
    if (w.size() != front.front().size())
      raise(Errc::DimensionMismatch, "weight length and front dimension differ");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : front) best = std::max(best, w.utility(v));
    total += best;
  }
  return total / static_cast<double>(weights.size());
}

}  // namespace vecgames
