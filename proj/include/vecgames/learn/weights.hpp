#pragma once

#include <vector>

#include "vecgames/concepts/scalarise.hpp"

namespace vecgames {

// Deterministic equally-spaced simplex grid. For d = 2 this is the k evenly
// spaced weights from (1, 0) to (0, 1); for d > 2 the standard simplex
// lattice of the smallest resolution with at least k points, truncated to k
// in descending lexicographic order. k = 1 yields the first vertex.
std::vector<WeightVector> generate_weights(int k, int d);

}  // namespace vecgames
