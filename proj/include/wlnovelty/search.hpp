#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wlnovelty/novelty.hpp"

namespace wlnovelty {

// Uniform node evaluator: smaller is better, kPruned discards the state.
class Evaluator {
  public:
    static constexpr std::int64_t kPruned = std::numeric_limits<std::int64_t>::max();

    virtual ~Evaluator() = default;
    virtual std::int64_t evaluate(const State& state) = 0;
};

class BaseEvaluator : public Evaluator {
  public:
    explicit BaseEvaluator(Heuristic& heuristic) : heuristic_(heuristic) {}
    std::int64_t evaluate(const State& state) override {
        HeuristicValue value = heuristic_.evaluate(state);
        return value == kDeadEnd ? kPruned : value;
    }

  private:
    Heuristic& heuristic_;
};

// Base heuristic filtered through quantified-both novelty. Dead ends are
// pruned before touching the feature table.
class NoveltyEvaluator : public Evaluator {
  public:
    NoveltyEvaluator(const GroundTask& task, Heuristic& heuristic, FeatureMode mode,
                     int wl_iterations, ColorFeature color_feature)
        : task_(task), heuristic_(heuristic) {
        extractor_.mode = mode;
        extractor_.wl_iterations = wl_iterations;
        extractor_.color_feature = color_feature;
    }

    std::int64_t evaluate(const State& state) override {
        HeuristicValue value = heuristic_.evaluate(state);
        if (value == kDeadEnd) return kPruned;
        std::vector<Feature> features = extractor_.extract(task_, state);
        return quantified_both(value, features, table_);
    }

    const NoveltyTable& table() const { return table_; }

  private:
    const GroundTask& task_;
    Heuristic& heuristic_;
    FeatureExtractor extractor_;
    NoveltyTable table_;
};

enum class Outcome {
    Solved,
    ProvedUnsolvable,
    ResourceLimit,
};

struct SearchLimits {
    double time_seconds = 0;        // 0 = unlimited
    std::size_t memory_mb = 0;      // resident-set cap, 0 = unlimited
    std::uint64_t max_expansions = 0;  // 0 = unlimited
};

struct SearchStats {
    std::uint64_t expansions = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t generated = 0;
    std::size_t peak_open = 0;
    double wall_seconds = 0;
};

using Plan = std::vector<int>;  // action indices into GroundTask::actions

struct SearchResult {
    Outcome outcome = Outcome::ResourceLimit;
    Plan plan;
    SearchStats stats;
};

// Eager greedy best-first search: successors are evaluated when
// generated, the open list pops (value, insertion order), goal testing
// happens on expansion, duplicates are detected on exact states and
// never reopened.
SearchResult gbfs(const GroundTask& task, Evaluator& evaluator,
                  const SearchLimits& limits = {});

bool validate(const GroundTask& task, const Plan& plan);

std::string plan_to_text(const GroundTask& task, const Plan& plan);

// Current resident set size, in megabytes.
std::size_t resident_memory_mb();

}  // namespace wlnovelty
