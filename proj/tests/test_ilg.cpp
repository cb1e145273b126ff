#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tasks.hpp"
#include "wlnovelty/ilg.hpp"
#include "wlnovelty/wl.hpp"

using namespace wlnovelty;

namespace {

std::map<NodeFeature, int> feature_histogram(const LabeledGraph& graph) {
    std::map<NodeFeature, int> histogram;
    for (const NodeFeature& f : graph.features) ++histogram[f];
    return histogram;
}

int find_node(const LabeledGraph& graph, const std::string& name) {
    for (int v = 0; v < graph.node_count(); ++v) {
        if (graph.node_names[v] == name) return v;
    }
    FAIL("no node named ", name);
    return -1;
}

// Sorted (neighbour name, label) view of one node's adjacency.
std::vector<std::pair<std::string, int>> named_adjacency(const LabeledGraph& graph,
                                                         const std::string& name) {
    std::vector<std::pair<std::string, int>> result;
    for (auto [neighbour, label] : graph.adjacency[find_node(graph, name)]) {
        result.emplace_back(graph.node_names[neighbour], label);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

// Three blocks: a and b on the table, c stacked on b; the goal wants b on
// a and c on the table. One goal atom (ontable(a)) already holds, so all
// three atom statuses appear at once.
static GroundTask three_block_task() {
    return tasks::ground_text(
        "(define (domain towers) (:requirements :strips)"
        " (:predicates (on ?x ?y) (ontable ?x)))",
        "(define (problem tower-1) (:domain towers)"
        " (:objects a b c)"
        " (:init (ontable a) (ontable b) (on c b))"
        " (:goal (and (on b a) (ontable c) (ontable a))))");
}

TEST_CASE("three-block graph: nodes, statuses, and argument edges") {
    GroundTask task = three_block_task();
    LabeledGraph graph = build_ilg(task, task.init);

    // 3 objects + |state ∪ goal| = 3 + 5 (ontable a/b/c, on(c,b), on(b,a)).
    CHECK(graph.node_count() == 8);

    std::map<NodeFeature, int> expected;
    expected[{NodeTag::Object, -1}] = 3;
    expected[{NodeTag::StateOnly, 1}] = 1;     // ontable(b)
    expected[{NodeTag::StateOnly, 0}] = 1;     // on(c,b)
    expected[{NodeTag::GoalOnly, 0}] = 1;      // on(b,a)
    expected[{NodeTag::GoalOnly, 1}] = 1;      // ontable(c)
    expected[{NodeTag::StateAndGoal, 1}] = 1;  // ontable(a)
    CHECK(feature_histogram(graph) == expected);

    // Every argument contributes one edge pair, so 7 atom arguments in
    // total give 14 directed edges.
    CHECK(graph.edges.size() == 14);

    CHECK(named_adjacency(graph, "on(c,b)") ==
          std::vector<std::pair<std::string, int>>{{"b", 2}, {"c", 1}});
    CHECK(named_adjacency(graph, "on(b,a)") ==
          std::vector<std::pair<std::string, int>>{{"a", 2}, {"b", 1}});
    // b appears in ontable(b) at position 1, on(c,b) at 2, on(b,a) at 1.
    CHECK(named_adjacency(graph, "b") ==
          std::vector<std::pair<std::string, int>>{
              {"on(b,a)", 1}, {"on(c,b)", 2}, {"ontable(b)", 1}});
}

TEST_CASE("directed edges come in mirrored pairs") {
    GroundTask task = three_block_task();
    LabeledGraph graph = build_ilg(task, task.init);
    std::multiset<std::tuple<int, int, int>> arcs;
    for (const LabeledEdge& e : graph.edges) arcs.insert({e.from, e.to, e.label});
    for (const LabeledEdge& e : graph.edges) {
        CHECK(arcs.count({e.to, e.from, e.label}) == arcs.count({e.from, e.to, e.label}));
    }
    // Adjacency mirrors the edge list.
    std::size_t adjacency_total = 0;
    for (const auto& row : graph.adjacency) adjacency_total += row.size();
    CHECK(adjacency_total == graph.edges.size());
}

TEST_CASE("nullary atoms become isolated nodes") {
    GroundTask task = tasks::ground_text(tasks::twin_goal_domain_text(),
                                         tasks::twin_goal_problem_text());
    LabeledGraph graph = build_ilg(task, task.init);
    // No objects; state {p} plus goal {q, r}.
    CHECK(graph.node_count() == 3);
    CHECK(graph.edges.empty());
    std::map<NodeFeature, int> histogram = feature_histogram(graph);
    CHECK(histogram[{NodeTag::StateOnly, 0}] == 1);
    CHECK(histogram[{NodeTag::GoalOnly, 1}] == 1);
    CHECK(histogram[{NodeTag::GoalOnly, 2}] == 1);
}

TEST_CASE("empty state leaves only objects and unreached goal atoms") {
    GroundTask task = three_block_task();
    LabeledGraph graph = build_ilg(task, State{});
    CHECK(graph.node_count() == 3 + 3);  // on(b,a), ontable(c), ontable(a)
    for (const NodeFeature& f : graph.features) {
        CHECK((f.tag == NodeTag::Object || f.tag == NodeTag::GoalOnly));
    }
}

TEST_CASE("input atoms outside the task universe are renderable") {
    IlgInput input;
    input.object_names = {"a", "b"};
    input.atoms.push_back({0, {0, 1}, true, false, "p(a,b)"});
    input.atoms.push_back({0, {1, 0}, false, true, "p(b,a)"});
    input.atoms.push_back({1, {}, true, true, "done"});
    LabeledGraph graph = build_ilg_graph(input);
    CHECK(graph.node_count() == 5);
    CHECK(graph.features[2] == NodeFeature{NodeTag::StateOnly, 0});
    CHECK(graph.features[3] == NodeFeature{NodeTag::GoalOnly, 0});
    CHECK(graph.features[4] == NodeFeature{NodeTag::StateAndGoal, 1});
    CHECK(graph.edges.size() == 8);
}

TEST_CASE("task-derived input marks achieved goal atoms") {
    GroundTask task = three_block_task();
    IlgInput input = ilg_input_from_task(task, task.init);
    int achieved = 0, goal_only = 0, state_only = 0;
    for (const IlgAtom& atom : input.atoms) {
        if (atom.in_state && atom.in_goal) ++achieved;
        else if (atom.in_goal) ++goal_only;
        else ++state_only;
    }
    CHECK(achieved == 1);
    CHECK(goal_only == 2);
    CHECK(state_only == 2);
    CHECK(input.object_names == task.object_names);
}

TEST_CASE("node names follow the task's object and atom names") {
    GroundTask task = tasks::ground_text(tasks::gripper_micro_domain_text(),
                                         tasks::gripper_micro_problem_text());
    LabeledGraph graph = build_ilg(task, task.init);
    for (std::size_t i = 0; i < task.object_names.size(); ++i) {
        CHECK(graph.node_names[i] == task.object_names[i]);
    }
    CHECK(std::find(graph.node_names.begin(), graph.node_names.end(), "at(b1,rb)") !=
          graph.node_names.end());
}

TEST_CASE("isomorphic tasks with different object orders refine equally") {
    // The same line of four nodes, objects declared in opposite orders.
    auto domain = parse_domain(tasks::chain_domain_text());
    GroundTask forward = ground(parse_problem(
        "(define (problem c) (:domain chain) (:objects n1 n2 n3 n4)"
        " (:init (at n1) (next n1 n2) (next n2 n3) (next n3 n4))"
        " (:goal (at n4)))", domain));
    GroundTask backward = ground(parse_problem(
        "(define (problem c) (:domain chain) (:objects n4 n3 n2 n1)"
        " (:init (at n1) (next n1 n2) (next n2 n3) (next n3 n4))"
        " (:goal (at n4)))", domain));
    HashStore store;
    FeatureMultiset lhs = refine(build_ilg(forward, forward.init), 3, store);
    FeatureMultiset rhs = refine(build_ilg(backward, backward.init), 3, store);
    CHECK(lhs == rhs);
}

TEST_CASE("dot output is an undirected graph over named nodes") {
    GroundTask task = three_block_task();
    std::string dot = to_dot(build_ilg(task, task.init));
    CHECK(dot.find("graph ilg {") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);
    CHECK(dot.find("ontable(a)") != std::string::npos);
    CHECK(dot.find("achieved") != std::string::npos);
    CHECK(dot.find("goal") != std::string::npos);
    // Each undirected edge printed once.
    std::size_t edge_lines = 0;
    for (std::size_t at = dot.find(" -- "); at != std::string::npos;
         at = dot.find(" -- ", at + 1)) {
        ++edge_lines;
    }
    CHECK(edge_lines == 7);
}
