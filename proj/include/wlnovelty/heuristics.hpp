#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>

#include "wlnovelty/ground.hpp"

namespace wlnovelty {

using HeuristicValue = std::int64_t;
inline constexpr HeuristicValue kDeadEnd = std::numeric_limits<HeuristicValue>::max();

class Heuristic {
  public:
    virtual ~Heuristic() = default;
    virtual HeuristicValue evaluate(const State& state) = 0;
};

// Number of goal atoms missing from the state.
class GoalCountHeuristic : public Heuristic {
  public:
    explicit GoalCountHeuristic(const GroundTask& task) : task_(task) {}
    HeuristicValue evaluate(const State& state) override;

  private:
    const GroundTask& task_;
};

// Shared machinery for the delete-relaxation heuristics: a Dijkstra sweep
// over unit-cost additive atom costs, plus per-atom best supporters.
class RelaxationHeuristic : public Heuristic {
  public:
    explicit RelaxationHeuristic(const GroundTask& task);

  protected:
    // Runs the sweep from `state`; returns false if some goal atom is
    // unreachable. Fills cost_ and supporter_.
    bool sweep(const State& state);

    const GroundTask& task_;
    std::vector<HeuristicValue> cost_;  // per atom
    std::vector<int> supporter_;        // cheapest achieving action, -1 for state atoms

  private:
    std::vector<std::vector<int>> consumers_;  // atom -> actions with it as precondition
    std::vector<int> zero_pre_actions_;
    std::vector<int> counter_;                 // per action, unmet preconditions
    std::vector<HeuristicValue> action_cost_;  // 1 + sum of precondition costs
};

// Sum of additive atom costs over the goal.
class AdditiveHeuristic : public RelaxationHeuristic {
  public:
    explicit AdditiveHeuristic(const GroundTask& task) : RelaxationHeuristic(task) {}
    HeuristicValue evaluate(const State& state) override;
};

// Size of a relaxed plan extracted by best-supporter backchaining;
// supporter ties break towards the lowest action index.
class FFHeuristic : public RelaxationHeuristic {
  public:
    explicit FFHeuristic(const GroundTask& task) : RelaxationHeuristic(task) {}
    HeuristicValue evaluate(const State& state) override;

  private:
    std::vector<std::vector<int>> achievers_;  // atom -> actions adding it
};

// name is one of "gc", "add", "ff".
std::unique_ptr<Heuristic> make_heuristic(const std::string& name, const GroundTask& task);

}  // namespace wlnovelty
