#pragma once

#include <vector>

#include "vecgames/concepts/scalarise.hpp"
#include "vecgames/core/types.hpp"

namespace vecgames {

// Count of distinct points in an already non-dominated front.
std::size_t cardinality(const std::vector<ObjectiveVector>& front);

// Exact hypervolume by dimension sweep: sort on the last objective, slice,
// recurse. Points that do not weakly dominate the reference point contribute
// nothing. Intended for d <= 6 and |front| <= 200.
double hypervolume(const std::vector<ObjectiveVector>& front, const ObjectiveVector& ref);

// Mean over the weight set of the best linear utility achieved by the front.
double expected_utility(const std::vector<ObjectiveVector>& front,
                        const std::vector<WeightVector>& weights);

}  // namespace vecgames
