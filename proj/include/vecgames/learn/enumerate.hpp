#pragma once

#include "vecgames/concepts/monfg.hpp"
#include "vecgames/core/env.hpp"

namespace vecgames {

// Exact Pareto front over all deterministic open-loop joint action sequences
// up to `horizon` steps (joint arms for one-shot environments). Candidates
// are evaluated exactly: by rollout for deterministic environments, by the
// closed-form expectation for one-shot environments that provide one. The
// value of a candidate is the mean over agents of the episodic return
// vectors. Guards the candidate count at 10^7.
std::vector<ObjectiveVector> brute_force_pf(Env& env, int horizon, Seed reset_seed = 0);

// Enumerates a one-shot environment into a normal-form game (per-agent reward
// matrices per joint action). Stochastic one-shot environments must provide
// exact expectations and a team reward.
Monfg monfg_from_env(Env& env, Seed reset_seed = 0);

}  // namespace vecgames
