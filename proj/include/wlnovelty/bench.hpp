#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlnovelty/search.hpp"

namespace wlnovelty {

// One planner configuration: a base heuristic plus an optional novelty
// wrapper. Identified by "gc", "ff+atwl", ...
struct RunConfig {
    std::string heuristic = "ff";  // gc | add | ff
    std::string novelty = "none";  // none | at | wl | atwl
    int wl_iterations = 2;
    ColorFeature color_feature = ColorFeature::Pair;

    double time_seconds = 300;
    std::size_t memory_mb = 4096;
    std::uint64_t max_expansions = 0;
    GroundLimits ground_limits;
};

std::string config_id(const RunConfig& config);

// Parses "ff+atwl" style ids into heuristic/novelty; other fields keep
// their current values. Throws std::invalid_argument on unknown ids.
void parse_config_id(const std::string& id, RunConfig& config);

// The twelve configurations of the evaluation grid: every base
// heuristic, each bare and wrapped with at / wl / at;wl novelty.
std::vector<std::string> all_config_ids();

SearchResult solve_task(const GroundTask& task, const RunConfig& config);

struct RunRecord {
    std::string domain;
    std::string problem;
    std::string config;
    std::string outcome;  // solved | unsolvable | limit
    std::uint64_t expansions = 0;
    std::uint64_t evaluations = 0;
    std::int64_t plan_length = -1;  // -1 when no plan was found
    double wall_seconds = 0;
};

std::string outcome_name(Outcome outcome);

// CSV renderers are pure so aggregation is testable without running
// any search. Column layouts:
//   records.csv        domain,problem,config,outcome,expansions,evaluations,
//                      plan_length,wall_time_s
//   coverage.csv       domain,<config>... with a trailing TOTAL row
//   coverage_norm.csv  same, cells divided by the number of problems in
//                      the domain solved by at least one config
//   expansion pairs    for two configs solved by both, who expanded
//                      strictly fewer nodes
std::string records_csv(const std::vector<RunRecord>& records, bool report_times);
std::string coverage_csv(const std::vector<RunRecord>& records,
                         const std::vector<std::string>& configs);
std::string coverage_norm_csv(const std::vector<RunRecord>& records,
                              const std::vector<std::string>& configs);
std::string expansion_pairs_csv(const std::vector<RunRecord>& records,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

// The pairing grid reported per base heuristic: base vs each novelty
// variant, then atom novelty vs graph-colour novelty.
std::vector<std::pair<std::string, std::string>> expansion_pairs_for(
    const std::string& base, const std::vector<std::string>& configs);

struct BenchOptions {
    std::string suite_dir;
    std::string out_dir;
    std::vector<std::string> configs;  // empty = all_config_ids()
    RunConfig base;                    // limits shared by every run
    bool report_times = false;         // false pins wall_time_s to 0.000
};

// Runs every config on every problem of every domain directory in the
// suite (a domain directory = domain.pddl plus p*.pddl problems), writes
// the CSV set into out_dir and returns the records. Unparsable tasks are
// skipped with a warning on stderr.
std::vector<RunRecord> run_bench(const BenchOptions& options);

}  // namespace wlnovelty
