#pragma once

// Reference implementations kept deliberately naive and structurally
// different from the library code; tests compare the two.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlnovelty/bench.hpp"
#include "wlnovelty/search.hpp"
#include "wlnovelty/symmetry.hpp"

namespace oracles {

using namespace wlnovelty;

// String-relabelling graph refinement: colours are literal strings, no
// id allocation involved. Returns the sorted multiset over all rounds.
std::vector<std::string> reference_wl(const LabeledGraph& graph, int iterations);

struct Exploration {
    bool exhausted = false;          // hit the cap before finishing
    bool solvable = false;
    std::vector<State> states;       // BFS order
    std::optional<std::size_t> goal_depth;
};

Exploration bfs_explore(const GroundTask& task, std::size_t max_states);

// Full Bellman-style fixpoint over all atoms and actions, no queues.
HeuristicValue naive_hadd(const GroundTask& task, const State& state);

// Relaxed-plan size under the same supporter rule (cheapest by additive
// cost, ties to the lowest action index), done by recursive descent.
HeuristicValue naive_hff(const GroundTask& task, const State& state);

// Minimal greedy best-first search with the same tie-breaking contract,
// built on ordered containers instead of a heap.
struct ReferenceResult {
    Outcome outcome = Outcome::ResourceLimit;
    Plan plan;
    std::uint64_t expansions = 0;
};

ReferenceResult reference_gbfs(const GroundTask& task, Evaluator& evaluator,
                               std::uint64_t max_expansions = 0);

// Grounding oracle: enumerates every typed binding with an odometer and
// filters by a naive reachability fixpoint over those bindings.
struct ReferenceGrounding {
    std::set<std::string> action_names;
    std::set<std::string> atom_names;  // reachable atoms plus goal atoms
};

ReferenceGrounding reference_ground(const LiftedProblem& problem);

// Novelty oracle: keeps the full sighting history per feature and takes
// minima on demand.
class ReplayNoveltyOracle {
  public:
    std::int64_t evaluate(HeuristicValue base, const std::vector<Feature>& features);

  private:
    std::map<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>,
             std::vector<HeuristicValue>>
        history_;
};

// Plain seen/unseen novelty: a state is flagged novel exactly when it
// carries a feature never sighted before, ignoring heuristic values.
class PresenceNovelty {
  public:
    bool evaluate(const std::vector<Feature>& features);

  private:
    std::set<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>> seen_;
};

}  // namespace oracles
