#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tasks.hpp"
#include "wlnovelty/search.hpp"

using namespace wlnovelty;

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int exit_code = -1;
    std::map<std::string, std::string> values;  // key=value stdout lines
};

// Runs the planner binary and captures its key=value output.
CliRun run_cli(const std::string& arguments) {
    static int counter = 0;
    fs::path capture = fs::temp_directory_path() /
                       ("wlnovelty_cli_" + std::to_string(counter++) + ".txt");
    std::string command =
        std::string(PLANNER_BIN) + " " + arguments + " > " + capture.string() + " 2>/dev/null";
    int status = std::system(command.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq != std::string::npos) {
            run.values[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    fs::remove(capture);
    return run;
}

std::string bundled(const std::string& relative) {
    return std::string(BENCHMARK_DIR) + "/" + relative;
}

// Reads a plan file of "(action args...)" lines back into action indices.
Plan read_plan(const GroundTask& task, const fs::path& path) {
    std::map<std::string, int> by_name;
    for (std::size_t a = 0; a < task.actions.size(); ++a) {
        by_name[task.actions[a].name] = static_cast<int>(a);
    }
    Plan plan;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        REQUIRE(by_name.count(line) == 1);
        plan.push_back(by_name[line]);
    }
    return plan;
}

}  // namespace

TEST_CASE("solve writes a valid plan and reports its stats") {
    fs::path plan_file = fs::temp_directory_path() / "wlnovelty_cli_plan.out";
    fs::remove(plan_file);
    CliRun run = run_cli("solve --domain " + bundled("mini/gripper/domain.pddl") +
                         " --problem " + bundled("mini/gripper/p01.pddl") +
                         " --heuristic ff --novelty atwl --plan-file " +
                         plan_file.string());
    CHECK(run.exit_code == 0);
    CHECK(run.values["domain"] == "gripper");
    CHECK(run.values["outcome"] == "solved");
    CHECK(run.values["config"] == "ff+atwl");
    CHECK(run.values["plan_file"] == plan_file.string());
    CHECK(run.values.count("expansions") == 1);
    CHECK(run.values.count("evaluations") == 1);
    CHECK(run.values.count("wall_time_s") == 1);

    GroundTask task = tasks::load_bundled("mini/gripper/domain.pddl",
                                          "mini/gripper/p01.pddl");
    Plan plan = read_plan(task, plan_file);
    CHECK(plan.size() == std::stoul(run.values["plan_length"]));
    CHECK(validate(task, plan));
    fs::remove(plan_file);
}

TEST_CASE("missing input files exit with the input-error code") {
    CliRun run = run_cli("solve --domain " + bundled("mini/gripper/domain.pddl") +
                         " --problem /nonexistent/p.pddl");
    CHECK(run.exit_code == 3);
}

TEST_CASE("mismatched flags exit with the input-error code") {
    CliRun run = run_cli("solve --domain " + bundled("mini/gripper/domain.pddl") +
                         " --problem " + bundled("mini/gripper/p01.pddl") +
                         " --heuristic h2");
    CHECK(run.exit_code == 3);
}

TEST_CASE("proved-unsolvable tasks exit with code one") {
    CliRun run = run_cli("solve --domain " + bundled("mini/chain/domain.pddl") +
                         " --problem " + bundled("mini/chain/p03.pddl") +
                         " --heuristic gc");
    CHECK(run.exit_code == 1);
    CHECK(run.values["outcome"] == "unsolvable");
    CHECK(run.values.count("plan_file") == 0);
}

TEST_CASE("expansion caps exit with the resource-limit code") {
    CliRun run = run_cli("solve --domain " + bundled("mini/gripper/domain.pddl") +
                         " --problem " + bundled("mini/gripper/p02.pddl") +
                         " --heuristic gc --max-expansions 1");
    CHECK(run.exit_code == 2);
    CHECK(run.values["outcome"] == "limit");
}

TEST_CASE("the initial state's graph can be dumped as DOT") {
    fs::path dot_file = fs::temp_directory_path() / "wlnovelty_cli_ilg.dot";
    fs::remove(dot_file);
    CliRun run = run_cli("solve --domain " + bundled("mini/blocksworld/domain.pddl") +
                         " --problem " + bundled("mini/blocksworld/p01.pddl") +
                         " --dump-ilg " + dot_file.string());
    CHECK(run.exit_code == 0);
    std::ifstream in(dot_file);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("graph ilg {") != std::string::npos);
    CHECK(content.str().find("--") != std::string::npos);
    fs::remove(dot_file);
    fs::remove("plan.out");  // default plan path of the dump run
}

TEST_CASE("bench emits the CSV set for a selected config list") {
    fs::path out_dir = fs::temp_directory_path() / "wlnovelty_cli_bench";
    fs::remove_all(out_dir);
    CliRun run = run_cli("bench --suite " + bundled("mini") + " --out " +
                         out_dir.string() + " --configs ff,ff+at,ff+wl" +
                         " --max-expansions 20000");
    CHECK(run.exit_code == 0);
    std::ifstream records(out_dir / "records.csv");
    REQUIRE(records.good());
    std::string header;
    std::getline(records, header);
    CHECK(header ==
          "domain,problem,config,outcome,expansions,evaluations,plan_length,wall_time_s");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(records, line)) ++rows;
    CHECK(rows == 12 * 3);  // twelve mini problems, three configs
    CHECK(fs::exists(out_dir / "coverage.csv"));
    CHECK(fs::exists(out_dir / "coverage_norm.csv"));
    CHECK(fs::exists(out_dir / "expansions_ff.csv"));
    fs::remove_all(out_dir);
}

TEST_CASE("bench rejects malformed config lists") {
    fs::path out_dir = fs::temp_directory_path() / "wlnovelty_cli_bench_bad";
    CliRun run = run_cli("bench --suite " + bundled("mini") + " --out " +
                         out_dir.string() + " --configs ff,potato");
    CHECK(run.exit_code == 3);
    fs::remove_all(out_dir);
}

TEST_CASE("symcheck passes on the bundled symmetric domains") {
    CliRun run = run_cli("symcheck --domain " + bundled("mini/gripper/domain.pddl") +
                         " --problem " + bundled("mini/gripper/p01.pddl") +
                         " --samples 25");
    CHECK(run.exit_code == 0);
    CHECK(run.values["samples"] == "25");
    CHECK(run.values["passed"] == "25");
    CHECK(run.values["failed"] == "0");
}
