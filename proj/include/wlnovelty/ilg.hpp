#pragma once

#include <string>
#include <vector>

#include "wlnovelty/ground.hpp"

namespace wlnovelty {

enum class NodeTag : unsigned char {
    Object,        // object node
    StateOnly,     // atom in the state but not the goal
    GoalOnly,      // goal atom not (yet) in the state
    StateAndGoal,  // achieved goal atom
};

// Initial node colour: objects share one feature; atom nodes are coloured
// by (status, predicate).
struct NodeFeature {
    NodeTag tag = NodeTag::Object;
    int predicate = -1;

    bool operator==(const NodeFeature&) const = default;
    bool operator<(const NodeFeature& other) const {
        if (tag != other.tag) return tag < other.tag;
        return predicate < other.predicate;
    }
};

struct LabeledEdge {
    int from = 0;
    int to = 0;
    int label = 0;  // argument position, 1-based
};

struct LabeledGraph {
    std::vector<NodeFeature> features;
    // adjacency[v] = (neighbour, edge label) pairs, in insertion order
    std::vector<std::vector<std::pair<int, int>>> adjacency;
    std::vector<LabeledEdge> edges;      // both directions listed
    std::vector<std::string> node_names;

    int node_count() const { return static_cast<int>(features.size()); }
    void add_edge(int from, int to, int label);
};

// Graph-construction input decoupled from ground atom ids so that
// permuted states (whose atoms may fall outside the reachable universe)
// can be rendered too.
struct IlgAtom {
    int predicate = -1;
    std::vector<int> objects;  // indices into the object table
    bool in_state = false;
    bool in_goal = false;
    std::string name;
};

struct IlgInput {
    std::vector<std::string> object_names;
    std::vector<IlgAtom> atoms;
};

// Nodes: every object, then every atom of state-union-goal. Each atom
// P(o1,...,ok) is joined to its arguments by edge pairs labelled with the
// 1-based argument position.
LabeledGraph build_ilg_graph(const IlgInput& input);

IlgInput ilg_input_from_task(const GroundTask& task, const State& state);
LabeledGraph build_ilg(const GroundTask& task, const State& state);

std::string to_dot(const LabeledGraph& graph);

}  // namespace wlnovelty
