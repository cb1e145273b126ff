#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wlnovelty/bench.hpp"
#include "wlnovelty/symmetry.hpp"

namespace {

using namespace wlnovelty;

constexpr int kExitSolved = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitInputError = 3;

struct SolveArgs {
    std::string domain_path;
    std::string problem_path;
    RunConfig config;
    std::string wl_feature = "pair";
    std::string plan_path = "plan.out";
    std::string dump_ilg_path;
};

void add_config_flags(CLI::App* cmd, RunConfig& config, std::string& wl_feature) {
    cmd->add_option("--heuristic", config.heuristic, "Base heuristic: gc, add or ff")
        ->check(CLI::IsMember({"gc", "add", "ff"}))
        ->capture_default_str();
    cmd->add_option("--novelty", config.novelty,
                    "Novelty wrapper: none, at, wl or atwl")
        ->check(CLI::IsMember({"none", "at", "wl", "atwl"}))
        ->capture_default_str();
    cmd->add_option("--wl-iterations", config.wl_iterations, "Refinement rounds")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--wl-feature", wl_feature,
                    "Colour feature identity: pair (colour, multiplicity) or color alone")
        ->check(CLI::IsMember({"pair", "color"}))
        ->capture_default_str();
    cmd->add_option("--time-limit", config.time_seconds, "Wall-clock limit in seconds")
        ->capture_default_str();
    cmd->add_option("--memory-limit", config.memory_mb, "Resident memory limit in MB")
        ->capture_default_str();
    cmd->add_option("--max-expansions", config.max_expansions,
                    "Expansion cap, 0 for unlimited")
        ->capture_default_str();
    cmd->add_option("--atom-budget", config.ground_limits.max_atoms,
                    "Grounded atom budget")
        ->capture_default_str();
    cmd->add_option("--action-budget", config.ground_limits.max_actions,
                    "Grounded action budget")
        ->capture_default_str();
}

int run_solve(SolveArgs& args) {
    args.config.color_feature =
        args.wl_feature == "color" ? ColorFeature::Alone : ColorFeature::Pair;
    GroundTask task;
    try {
        auto domain = load_domain(args.domain_path);
        LiftedProblem problem = load_problem(args.problem_path, domain);
        task = ground(problem, args.config.ground_limits);
    } catch (const GroundLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (!args.dump_ilg_path.empty()) {
        std::ofstream dot(args.dump_ilg_path);
        if (!dot) {
            std::cerr << "error: cannot write '" << args.dump_ilg_path << "'\n";
            return kExitInputError;
        }
        dot << to_dot(build_ilg(task, task.init));
    }

    SearchResult result = solve_task(task, args.config);

    std::printf("domain=%s\n", task.domain_name.c_str());
    std::printf("problem=%s\n", task.problem_name.c_str());
    std::printf("config=%s\n", config_id(args.config).c_str());
    std::printf("atoms=%u\n", task.atom_count());
    std::printf("actions=%zu\n", task.actions.size());
    std::printf("outcome=%s\n", outcome_name(result.outcome).c_str());
    std::printf("expansions=%llu\n",
                static_cast<unsigned long long>(result.stats.expansions));
    std::printf("evaluations=%llu\n",
                static_cast<unsigned long long>(result.stats.evaluations));
    std::printf("generated=%llu\n",
                static_cast<unsigned long long>(result.stats.generated));
    std::printf("peak_open=%zu\n", result.stats.peak_open);
    if (result.outcome == Outcome::Solved) {
        std::printf("plan_length=%zu\n", result.plan.size());
    }
    std::printf("wall_time_s=%.3f\n", result.stats.wall_seconds);

    if (result.outcome == Outcome::Solved) {
        std::ofstream out(args.plan_path);
        if (!out) {
            std::cerr << "error: cannot write '" << args.plan_path << "'\n";
            return kExitInputError;
        }
        out << plan_to_text(task, result.plan);
        std::printf("plan_file=%s\n", args.plan_path.c_str());
        return kExitSolved;
    }
    if (result.outcome == Outcome::ProvedUnsolvable) return kExitUnsolvable;
    return kExitResourceLimit;
}

int run_bench_cmd(BenchOptions& options, const std::string& wl_feature,
                  const std::string& configs_arg) {
    options.base.color_feature =
        wl_feature == "color" ? ColorFeature::Alone : ColorFeature::Pair;
    if (configs_arg != "all") {
        options.configs.clear();
        std::string current;
        for (char c : configs_arg + ",") {
            if (c == ',') {
                if (!current.empty()) options.configs.push_back(current);
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        RunConfig probe;
        for (const std::string& id : options.configs) {
            parse_config_id(id, probe);  // validates
        }
    }
    run_bench(options);
    return 0;
}

int run_symcheck_cmd(const std::string& domain_path, const std::string& problem_path,
                     const SymcheckOptions& options, const GroundLimits& limits) {
    GroundTask task;
    try {
        auto domain = load_domain(domain_path);
        LiftedProblem problem = load_problem(problem_path, domain);
        task = ground(problem, limits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    SymcheckReport report = run_symcheck(task, options);
    std::printf("samples=%d\n", report.samples);
    std::printf("passed=%d\n", report.passed);
    std::printf("failed=%d\n", report.samples - report.passed);
    std::printf("identity_permutations=%d\n", report.identity_permutations);
    return report.passed == report.samples ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy best-first planner with graph-colour novelty heuristics"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve one task and write the plan");
    solve->add_option("--domain", solve_args.domain_path, "Domain PDDL file")->required();
    solve->add_option("--problem", solve_args.problem_path, "Problem PDDL file")->required();
    add_config_flags(solve, solve_args.config, solve_args.wl_feature);
    solve->add_option("--plan-file", solve_args.plan_path, "Where to write the plan")
        ->capture_default_str();
    solve->add_option("--dump-ilg", solve_args.dump_ilg_path,
                      "Write the initial state's instance graph as DOT");

    BenchOptions bench_options;
    std::string bench_wl_feature = "pair";
    std::string bench_configs = "all";
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite and emit CSVs");
    bench->add_option("--suite", bench_options.suite_dir,
                      "Directory of domain directories (domain.pddl + p*.pddl)")
        ->required();
    bench->add_option("--out", bench_options.out_dir, "Output directory for CSV files")
        ->required();
    bench->add_option("--configs", bench_configs,
                      "Comma-separated config ids (e.g. gc,ff+atwl) or 'all'")
        ->capture_default_str();
    add_config_flags(bench, bench_options.base, bench_wl_feature);
    bench->add_flag("--times", bench_options.report_times,
                    "Record measured wall times instead of 0.000");

    std::string sym_domain;
    std::string sym_problem;
    SymcheckOptions sym_options;
    GroundLimits sym_limits;
    CLI::App* symcheck =
        app.add_subcommand("symcheck", "Check colour invariance under object renaming");
    symcheck->add_option("--domain", sym_domain, "Domain PDDL file")->required();
    symcheck->add_option("--problem", sym_problem, "Problem PDDL file")->required();
    symcheck->add_option("--samples", sym_options.samples, "Number of (state, renaming) pairs")
        ->capture_default_str();
    symcheck->add_option("--wl-iterations", sym_options.wl_iterations, "Refinement rounds")
        ->capture_default_str();
    symcheck->add_option("--walk-steps", sym_options.max_walk_steps,
                         "Maximum random-walk length per sample")
        ->capture_default_str();
    symcheck->add_option("--seed", sym_options.seed, "Sampling seed")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInputError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (bench->parsed()) return run_bench_cmd(bench_options, bench_wl_feature, bench_configs);
        if (symcheck->parsed()) {
            return run_symcheck_cmd(sym_domain, sym_problem, sym_options, sym_limits);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
