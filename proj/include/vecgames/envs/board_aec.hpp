#pragma once

#include "vecgames/core/aec.hpp"

namespace vecgames {

// Turn-order bookkeeping shared by the native turn-based games: reward
// accumulation between turns, closing visits for finished agents, and the
// agent cycle. Subclasses provide the game rules.
class BoardAecBase : public AecEnv {
 public:
  void reset(Seed seed) override;
  const std::vector<AgentId>& agents() const override { return cycle_; }
  const AgentId& current_agent() const override;
  AecView last() const override;
  void step(const std::optional<Action>& action) override;

 protected:
  void init_agents(std::vector<AgentId> names) { names_ = std::move(names); }
  const std::vector<AgentId>& names() const { return names_; }

  virtual void game_reset(Seed seed) = 0;
  virtual bool game_over() const = 0;
  virtual int game_mover() const = 0;  // index into names()
  // Applies a validated-in-space action; fills one reward per agent index.
  virtual void game_apply(const Action& action, std::vector<ObjectiveVector>& rewards) = 0;
  virtual Observation game_observe(int agent_index) const = 0;

 private:
  int index_of(const AgentId& agent) const;

  std::vector<AgentId> names_;
  std::vector<AgentId> cycle_;
  std::size_t cursor_ = 0;
  std::vector<ObjectiveVector> accumulated_;
  std::vector<bool> finished_;
};

}  // namespace vecgames
