#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wlnovelty/bench.hpp"
#include "wlnovelty/ilg.hpp"
#include "wlnovelty/symmetry.hpp"

namespace py = pybind11;
using namespace wlnovelty;

namespace {

State state_from_ids(const GroundTask& task, std::vector<AtomId> atoms) {
    State state;
    state.atoms = std::move(atoms);
    std::sort(state.atoms.begin(), state.atoms.end());
    state.atoms.erase(std::unique(state.atoms.begin(), state.atoms.end()),
                      state.atoms.end());
    for (AtomId id : state.atoms) {
        if (id >= task.atom_count()) {
            throw std::out_of_range("atom id " + std::to_string(id) +
                                    " outside the task universe");
        }
    }
    return state;
}

RunConfig config_from(const std::string& id, int wl_iterations, bool count_multiplicity,
                      double time_seconds, std::size_t memory_mb,
                      std::uint64_t max_expansions) {
    RunConfig config;
    parse_config_id(id, config);
    config.wl_iterations = wl_iterations;
    config.color_feature = count_multiplicity ? ColorFeature::Pair : ColorFeature::Alone;
    config.time_seconds = time_seconds;
    config.memory_mb = memory_mb;
    config.max_expansions = max_expansions;
    return config;
}

py::dict result_to_dict(const GroundTask& task, const SearchResult& result) {
    py::dict out;
    out["outcome"] = outcome_name(result.outcome);
    py::list plan;
    for (int a : result.plan) plan.append(task.actions[a].name);
    out["plan"] = plan;
    out["expansions"] = result.stats.expansions;
    out["evaluations"] = result.stats.evaluations;
    out["generated"] = result.stats.generated;
    out["wall_time_s"] = result.stats.wall_seconds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_wlnovelty, m) {
    m.doc() = "Greedy best-first planner with graph-colour novelty heuristics";

    py::class_<GroundTask, std::shared_ptr<GroundTask>>(m, "Task")
        .def_property_readonly("domain",
                               [](const GroundTask& t) { return t.domain_name; })
        .def_property_readonly("problem",
                               [](const GroundTask& t) { return t.problem_name; })
        .def_property_readonly("atom_names",
                               [](const GroundTask& t) { return t.atom_names; })
        .def_property_readonly("object_names",
                               [](const GroundTask& t) { return t.object_names; })
        .def_property_readonly("action_names",
                               [](const GroundTask& t) {
                                   std::vector<std::string> names;
                                   names.reserve(t.actions.size());
                                   for (const GroundAction& a : t.actions) {
                                       names.push_back(a.name);
                                   }
                                   return names;
                               })
        .def_property_readonly("init",
                               [](const GroundTask& t) { return t.init.atoms; })
        .def_property_readonly("goal", [](const GroundTask& t) { return t.goal; })
        .def("__repr__", [](const GroundTask& t) {
            return "<Task " + t.domain_name + "/" + t.problem_name + ": " +
                   std::to_string(t.atoms.size()) + " atoms, " +
                   std::to_string(t.actions.size()) + " actions>";
        });

    m.def(
        "load_task",
        [](const std::string& domain_path, const std::string& problem_path,
           std::size_t max_atoms, std::size_t max_actions) {
            auto domain = load_domain(domain_path);
            GroundLimits limits{max_atoms, max_actions};
            return std::make_shared<GroundTask>(
                ground(load_problem(problem_path, domain), limits));
        },
        py::arg("domain_path"), py::arg("problem_path"),
        py::arg("max_atoms") = GroundLimits{}.max_atoms,
        py::arg("max_actions") = GroundLimits{}.max_actions,
        "Parse and ground a PDDL domain/problem pair");

    m.def(
        "ground_text",
        [](const std::string& domain_text, const std::string& problem_text) {
            auto domain = parse_domain(domain_text);
            return std::make_shared<GroundTask>(
                ground(parse_problem(problem_text, domain)));
        },
        py::arg("domain_text"), py::arg("problem_text"),
        "Parse and ground PDDL from strings");

    m.def(
        "heuristic",
        [](const GroundTask& task, const std::string& name,
           std::vector<AtomId> state_atoms) -> py::object {
            State state = state_from_ids(task, std::move(state_atoms));
            HeuristicValue value = make_heuristic(name, task)->evaluate(state);
            if (value == kDeadEnd) return py::none();
            return py::int_(value);
        },
        py::arg("task"), py::arg("name"), py::arg("state"),
        "Evaluate gc/add/ff on a state (list of atom ids); None marks a dead end");

    m.def(
        "wl_features",
        [](const GroundTask& task, std::vector<AtomId> state_atoms, int iterations) {
            State state = state_from_ids(task, std::move(state_atoms));
            HashStore store;
            FeatureMultiset multiset =
                refine(build_ilg(task, state), iterations, store);
            return multiset.counts;
        },
        py::arg("task"), py::arg("state"), py::arg("iterations") = 2,
        "Colour multiset of the state's instance graph as (colour, count) pairs");

    m.def(
        "ilg_dot",
        [](const GroundTask& task, std::vector<AtomId> state_atoms) {
            return to_dot(build_ilg(task, state_from_ids(task, std::move(state_atoms))));
        },
        py::arg("task"), py::arg("state"),
        "The state's instance graph in DOT format");

    m.def(
        "solve",
        [](std::shared_ptr<GroundTask> task, const std::string& config,
           int wl_iterations, bool count_multiplicity, double time_seconds,
           std::size_t memory_mb, std::uint64_t max_expansions) {
            SearchResult result =
                solve_task(*task, config_from(config, wl_iterations, count_multiplicity,
                                              time_seconds, memory_mb, max_expansions));
            return result_to_dict(*task, result);
        },
        py::arg("task"), py::arg("config") = "ff+atwl", py::arg("wl_iterations") = 2,
        py::arg("count_multiplicity") = true, py::arg("time_seconds") = 300.0,
        py::arg("memory_mb") = std::size_t{4096}, py::arg("max_expansions") = 0,
        "Greedy best-first search under one configuration id (e.g. 'ff+wl')");

    m.def(
        "validate",
        [](const GroundTask& task, const std::vector<std::string>& plan) {
            std::map<std::string, int> by_name;
            for (std::size_t a = 0; a < task.actions.size(); ++a) {
                by_name[task.actions[a].name] = static_cast<int>(a);
            }
            Plan indices;
            for (const std::string& name : plan) {
                auto it = by_name.find(name);
                if (it == by_name.end()) return false;
                indices.push_back(it->second);
            }
            return validate(task, indices);
        },
        py::arg("task"), py::arg("plan"),
        "Check a plan given as action-name strings");

    m.def(
        "symcheck",
        [](const GroundTask& task, int samples, int wl_iterations, int max_walk_steps,
           std::uint64_t seed) {
            SymcheckOptions options;
            options.samples = samples;
            options.wl_iterations = wl_iterations;
            options.max_walk_steps = max_walk_steps;
            options.seed = seed;
            SymcheckReport report = run_symcheck(task, options);
            py::dict out;
            out["samples"] = report.samples;
            out["passed"] = report.passed;
            out["identity_permutations"] = report.identity_permutations;
            return out;
        },
        py::arg("task"), py::arg("samples") = 100, py::arg("wl_iterations") = 2,
        py::arg("max_walk_steps") = 30, py::arg("seed") = std::uint64_t{2024},
        "Sample goal-stabilizing renamings and report colour-multiset invariance");

    m.def("config_ids", &all_config_ids, "The twelve benchmark configuration ids");
}
