#pragma once

#include "vecgames/learn/iql.hpp"

namespace vecgames {

// Runs the greedy joint policy for `episodes` episodes and returns the
// component-wise mean of the undiscounted episodic return vectors, averaged
// over agents (for team-reward environments this is the shared team vector).
ObjectiveVector evaluate_policy(Env& env, const TabularPolicy& policy, int episodes, Seed seed);

// Closed-form evaluation for one-shot environments exposing exact
// expectations: the greedy joint action's expected team return.
ObjectiveVector evaluate_policy_exact(Env& env, const TabularPolicy& policy);

}  // namespace vecgames
