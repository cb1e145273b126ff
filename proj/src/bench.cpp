#include "wlnovelty/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace wlnovelty {

std::string config_id(const RunConfig& config) {
    if (config.novelty == "none") return config.heuristic;
    return config.heuristic + "+" + config.novelty;
}

void parse_config_id(const std::string& id, RunConfig& config) {
    std::string heuristic = id;
    std::string novelty = "none";
    auto plus = id.find('+');
    if (plus != std::string::npos) {
        heuristic = id.substr(0, plus);
        novelty = id.substr(plus + 1);
    }
    if (heuristic != "gc" && heuristic != "add" && heuristic != "ff") {
        throw std::invalid_argument("unknown heuristic '" + heuristic + "' in '" + id + "'");
    }
    if (novelty != "none" && novelty != "at" && novelty != "wl" && novelty != "atwl") {
        throw std::invalid_argument("unknown novelty '" + novelty + "' in '" + id + "'");
    }
    config.heuristic = heuristic;
    config.novelty = novelty;
}

std::vector<std::string> all_config_ids() {
    std::vector<std::string> ids;
    for (const char* h : {"gc", "add", "ff"}) {
        for (const char* n : {"", "+at", "+wl", "+atwl"}) {
            ids.push_back(std::string(h) + n);
        }
    }
    return ids;
}

SearchResult solve_task(const GroundTask& task, const RunConfig& config) {
    std::unique_ptr<Heuristic> heuristic = make_heuristic(config.heuristic, task);
    SearchLimits limits;
    limits.time_seconds = config.time_seconds;
    limits.memory_mb = config.memory_mb;
    limits.max_expansions = config.max_expansions;
    if (config.novelty == "none") {
        BaseEvaluator evaluator(*heuristic);
        return gbfs(task, evaluator, limits);
    }
    FeatureMode mode = config.novelty == "at"   ? FeatureMode::Atoms
                       : config.novelty == "wl" ? FeatureMode::Colors
                                                : FeatureMode::AtomsColors;
    NoveltyEvaluator evaluator(task, *heuristic, mode, config.wl_iterations,
                               config.color_feature);
    return gbfs(task, evaluator, limits);
}

std::string outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::Solved: return "solved";
        case Outcome::ProvedUnsolvable: return "unsolvable";
        case Outcome::ResourceLimit: return "limit";
    }
    return "limit";
}

namespace {

std::string format_seconds(double seconds) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f", seconds);
    return buffer;
}

std::string format_fraction(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

std::vector<std::string> sorted_domains(const std::vector<RunRecord>& records) {
    std::set<std::string> domains;
    for (const RunRecord& r : records) domains.insert(r.domain);
    return {domains.begin(), domains.end()};
}

}  // namespace

std::string records_csv(const std::vector<RunRecord>& records, bool report_times) {
    std::ostringstream os;
    os << "domain,problem,config,outcome,expansions,evaluations,plan_length,wall_time_s\n";
    for (const RunRecord& r : records) {
        os << r.domain << "," << r.problem << "," << r.config << "," << r.outcome << ","
           << r.expansions << "," << r.evaluations << ",";
        if (r.plan_length >= 0) os << r.plan_length;
        os << "," << format_seconds(report_times ? r.wall_seconds : 0.0) << "\n";
    }
    return os.str();
}

std::string coverage_csv(const std::vector<RunRecord>& records,
                         const std::vector<std::string>& configs) {
    std::map<std::string, std::map<std::string, int>> solved;  // domain -> config -> n
    for (const RunRecord& r : records) {
        if (r.outcome == "solved") ++solved[r.domain][r.config];
    }
    std::ostringstream os;
    os << "domain";
    for (const std::string& c : configs) os << "," << c;
    os << "\n";
    std::map<std::string, int> totals;
    for (const std::string& domain : sorted_domains(records)) {
        os << domain;
        for (const std::string& c : configs) {
            int n = solved[domain][c];
            totals[c] += n;
            os << "," << n;
        }
        os << "\n";
    }
    os << "TOTAL";
    for (const std::string& c : configs) os << "," << totals[c];
    os << "\n";
    return os.str();
}

std::string coverage_norm_csv(const std::vector<RunRecord>& records,
                              const std::vector<std::string>& configs) {
    std::map<std::string, std::map<std::string, int>> solved;
    std::map<std::string, std::set<std::string>> any_solved;  // domain -> problems
    for (const RunRecord& r : records) {
        if (r.outcome == "solved") {
            ++solved[r.domain][r.config];
            any_solved[r.domain].insert(r.problem);
        }
    }
    std::ostringstream os;
    os << "domain";
    for (const std::string& c : configs) os << "," << c;
    os << "\n";
    std::map<std::string, double> totals;
    for (const std::string& domain : sorted_domains(records)) {
        std::size_t denominator = any_solved[domain].size();
        os << domain;
        for (const std::string& c : configs) {
            double value =
                denominator == 0 ? 0.0 : static_cast<double>(solved[domain][c]) /
                                             static_cast<double>(denominator);
            totals[c] += value;
            os << "," << format_fraction(value);
        }
        os << "\n";
    }
    os << "TOTAL";
    for (const std::string& c : configs) os << "," << format_fraction(totals[c]);
    os << "\n";
    return os.str();
}

std::vector<std::pair<std::string, std::string>> expansion_pairs_for(
    const std::string& base, const std::vector<std::string>& configs) {
    auto have = [&](const std::string& id) {
        return std::find(configs.begin(), configs.end(), id) != configs.end();
    };
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const char* variant : {"at", "wl", "atwl"}) {
        if (have(base) && have(base + "+" + variant)) {
            pairs.push_back({base, base + "+" + variant});
        }
    }
    if (have(base + "+at") && have(base + "+wl")) {
        pairs.push_back({base + "+at", base + "+wl"});
    }
    return pairs;
}

std::string expansion_pairs_csv(
    const std::vector<RunRecord>& records,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    // (domain, problem, config) -> expansions, solved runs only
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::uint64_t>> runs;
    for (const RunRecord& r : records) {
        if (r.outcome == "solved") {
            runs[{r.domain, r.problem}][r.config] = r.expansions;
        }
    }
    std::ostringstream os;
    os << "domain";
    for (const auto& [x, y] : pairs) {
        os << "," << x << "_fewer," << y << "_fewer";
    }
    os << "\n";
    std::map<std::string, std::vector<std::pair<int, int>>> counts;  // domain -> per pair
    for (const std::string& domain : sorted_domains(records)) {
        counts[domain].assign(pairs.size(), {0, 0});
    }
    for (const auto& [key, by_config] : runs) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto x = by_config.find(pairs[i].first);
            auto y = by_config.find(pairs[i].second);
            if (x == by_config.end() || y == by_config.end()) continue;
            if (x->second < y->second) ++counts[key.first][i].first;
            if (y->second < x->second) ++counts[key.first][i].second;
        }
    }
    std::vector<std::pair<int, int>> totals(pairs.size(), {0, 0});
    for (const std::string& domain : sorted_domains(records)) {
        os << domain;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            os << "," << counts[domain][i].first << "," << counts[domain][i].second;
            totals[i].first += counts[domain][i].first;
            totals[i].second += counts[domain][i].second;
        }
        os << "\n";
    }
    os << "TOTAL";
    for (const auto& [x, y] : totals) os << "," << x << "," << y;
    os << "\n";
    return os.str();
}

namespace {

struct SuiteProblem {
    std::string domain_name;   // directory name
    std::string problem_name;  // file stem
    fs::path path;
};

struct SuiteDomain {
    std::string name;
    fs::path domain_file;
    std::vector<SuiteProblem> problems;
};

std::vector<SuiteDomain> discover_suite(const fs::path& root) {
    std::vector<SuiteDomain> suite;
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) dirs.push_back(entry.path());
    }
    std::sort(dirs.begin(), dirs.end());
    for (const fs::path& dir : dirs) {
        fs::path domain_file = dir / "domain.pddl";
        if (!fs::exists(domain_file)) {
            std::cerr << "[bench] skipping " << dir << ": no domain.pddl\n";
            continue;
        }
        SuiteDomain domain;
        domain.name = dir.filename().string();
        domain.domain_file = domain_file;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() == ".pddl" &&
                entry.path().filename() != "domain.pddl") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& file : files) {
            domain.problems.push_back({domain.name, file.stem().string(), file});
        }
        suite.push_back(std::move(domain));
    }
    return suite;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << content;
}

}  // namespace

std::vector<RunRecord> run_bench(const BenchOptions& options) {
    std::vector<std::string> configs =
        options.configs.empty() ? all_config_ids() : options.configs;
    std::vector<RunRecord> records;

    for (const SuiteDomain& domain : discover_suite(options.suite_dir)) {
        std::shared_ptr<const Domain> parsed_domain;
        try {
            parsed_domain = load_domain(domain.domain_file.string());
        } catch (const std::exception& e) {
            std::cerr << "[bench] skipping domain " << domain.name << ": " << e.what()
                      << "\n";
            continue;
        }
        for (const SuiteProblem& problem : domain.problems) {
            GroundTask task;
            try {
                LiftedProblem lifted =
                    load_problem(problem.path.string(), parsed_domain);
                task = ground(lifted, options.base.ground_limits);
            } catch (const GroundLimitError& e) {
                // Grounding blow-up is a resource failure, not a bad input.
                for (const std::string& id : configs) {
                    records.push_back(
                        {domain.name, problem.problem_name, id, "limit", 0, 0, -1, 0});
                }
                std::cerr << "[bench] " << domain.name << "/" << problem.problem_name
                          << ": " << e.what() << "\n";
                continue;
            } catch (const std::exception& e) {
                std::cerr << "[bench] skipping " << domain.name << "/"
                          << problem.problem_name << ": " << e.what() << "\n";
                continue;
            }
            for (const std::string& id : configs) {
                RunConfig config = options.base;
                parse_config_id(id, config);
                SearchResult result = solve_task(task, config);
                RunRecord record;
                record.domain = domain.name;
                record.problem = problem.problem_name;
                record.config = id;
                record.outcome = outcome_name(result.outcome);
                record.expansions = result.stats.expansions;
                record.evaluations = result.stats.evaluations;
                record.plan_length = result.outcome == Outcome::Solved
                                         ? static_cast<std::int64_t>(result.plan.size())
                                         : -1;
                record.wall_seconds = result.stats.wall_seconds;
                records.push_back(std::move(record));
                std::cerr << "[bench] " << domain.name << "/" << problem.problem_name
                          << " " << id << ": " << records.back().outcome << " ("
                          << records.back().expansions << " expansions)\n";
            }
        }
    }

    fs::create_directories(options.out_dir);
    fs::path out(options.out_dir);
    write_file(out / "records.csv", records_csv(records, options.report_times));
    write_file(out / "coverage.csv", coverage_csv(records, configs));
    write_file(out / "coverage_norm.csv", coverage_norm_csv(records, configs));
    for (const char* base : {"gc", "add", "ff"}) {
        auto pairs = expansion_pairs_for(base, configs);
        if (!pairs.empty()) {
            write_file(out / (std::string("expansions_") + base + ".csv"),
                       expansion_pairs_csv(records, pairs));
        }
    }
    return records;
}

}  // namespace wlnovelty
