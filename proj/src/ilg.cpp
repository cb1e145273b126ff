#include "wlnovelty/ilg.hpp"

#include <algorithm>
#include <sstream>

namespace wlnovelty {

void LabeledGraph::add_edge(int from, int to, int label) {
    adjacency[from].push_back({to, label});
    edges.push_back({from, to, label});
}

LabeledGraph build_ilg_graph(const IlgInput& input) {
    LabeledGraph graph;
    int object_count = static_cast<int>(input.object_names.size());
    graph.features.reserve(object_count + input.atoms.size());
    graph.node_names.reserve(object_count + input.atoms.size());
    for (const std::string& name : input.object_names) {
        graph.features.push_back({NodeTag::Object, -1});
        graph.node_names.push_back(name);
    }
    for (const IlgAtom& atom : input.atoms) {
        NodeTag tag;
        if (atom.in_state && atom.in_goal) {
            tag = NodeTag::StateAndGoal;
        } else if (atom.in_goal) {
            tag = NodeTag::GoalOnly;
        } else {
            tag = NodeTag::StateOnly;
        }
        graph.features.push_back({tag, atom.predicate});
        graph.node_names.push_back(atom.name);
    }
    graph.adjacency.resize(graph.features.size());
    for (std::size_t i = 0; i < input.atoms.size(); ++i) {
        int atom_node = object_count + static_cast<int>(i);
        const IlgAtom& atom = input.atoms[i];
        for (std::size_t pos = 0; pos < atom.objects.size(); ++pos) {
            int object_node = atom.objects[pos];
            int label = static_cast<int>(pos) + 1;
            graph.add_edge(atom_node, object_node, label);
            graph.add_edge(object_node, atom_node, label);
        }
    }
    return graph;
}

IlgInput ilg_input_from_task(const GroundTask& task, const State& state) {
    IlgInput input;
    input.object_names = task.object_names;
    // Atom nodes in id order over state-union-goal; both are sorted.
    std::vector<AtomId> ids;
    std::set_union(state.atoms.begin(), state.atoms.end(), task.goal.begin(),
                   task.goal.end(), std::back_inserter(ids));
    input.atoms.reserve(ids.size());
    for (AtomId id : ids) {
        IlgAtom atom;
        atom.predicate = task.atoms[id].predicate;
        atom.objects = task.atoms[id].args;
        atom.in_state = state.contains(id);
        atom.in_goal = std::binary_search(task.goal.begin(), task.goal.end(), id);
        atom.name = task.atom_names[id];
        input.atoms.push_back(std::move(atom));
    }
    return input;
}

LabeledGraph build_ilg(const GroundTask& task, const State& state) {
    return build_ilg_graph(ilg_input_from_task(task, state));
}

std::string to_dot(const LabeledGraph& graph) {
    static const char* tag_names[] = {"object", "state", "goal", "achieved"};
    std::ostringstream os;
    os << "graph ilg {\n";
    for (int v = 0; v < graph.node_count(); ++v) {
        const NodeFeature& f = graph.features[v];
        os << "  n" << v << " [label=\"" << graph.node_names[v] << "\\n"
           << tag_names[static_cast<int>(f.tag)] << "\"";
        if (f.tag == NodeTag::Object) os << " shape=box";
        os << "];\n";
    }
    // Edges come in symmetric pairs; print each undirected edge once.
    for (const LabeledEdge& e : graph.edges) {
        if (e.from < e.to) {
            os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.label << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace wlnovelty
