#include "wlnovelty/ground.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace wlnovelty {

bool State::contains(AtomId atom) const {
    return std::binary_search(atoms.begin(), atoms.end(), atom);
}

std::size_t StateHash::operator()(const State& state) const {
    // FNV-1a over the id sequence; states are canonical (sorted, unique).
    std::uint64_t h = 1469598103934665603ull;
    for (AtomId atom : state.atoms) {
        h ^= atom;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

namespace {

std::string atom_key(int predicate, const std::vector<int>& args) {
    std::string key = std::to_string(predicate);
    for (int arg : args) {
        key.push_back('|');
        key += std::to_string(arg);
    }
    return key;
}

std::string format_atom_name(const GroundTask& task, int predicate,
                             const std::vector<int>& args) {
    if (args.empty()) return task.predicate_names[predicate];
    std::string name = task.predicate_names[predicate];
    name.push_back('(');
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) name.push_back(',');
        name += task.object_names[args[i]];
    }
    name.push_back(')');
    return name;
}

class Grounder {
  public:
    Grounder(const LiftedProblem& problem, const GroundLimits& limits)
        : problem_(problem), domain_(*problem.domain), limits_(limits) {}

    GroundTask run() {
        build_predicates();
        build_objects();
        seed_reachable();
        fixpoint();
        finish_goal();
        finish_actions();
        finish_init();
        return std::move(task_);
    }

  private:
    void build_predicates() {
        for (const PredicateDecl& p : domain_.predicates) {
            task_.predicate_names.push_back(p.name);
            task_.predicate_arity.push_back(p.arity());
        }
        task_.first_type_predicate = static_cast<int>(task_.predicate_names.size());
        type_pred_.clear();
        if (domain_.typed) {
            for (const TypeDecl& t : domain_.types) {
                if (domain_.predicate_id(t.name)) {
                    throw GroundError("type '" + t.name +
                                      "' collides with a predicate of the same name");
                }
                type_pred_[t.name] = static_cast<int>(task_.predicate_names.size());
                task_.predicate_names.push_back(t.name);
                task_.predicate_arity.push_back(1);
            }
        }
    }

    void build_objects() {
        task_.objects = problem_.objects;
        for (const TypedName& obj : task_.objects) {
            task_.object_names.push_back(obj.name);
        }
    }

    AtomId add_atom(int predicate, std::vector<int> args) {
        std::string key = atom_key(predicate, args);
        auto it = task_.atom_index_by_key.find(key);
        if (it != task_.atom_index_by_key.end()) return it->second;
        if (task_.atoms.size() >= limits_.max_atoms) {
            throw GroundLimitError("atom budget exceeded (" +
                                   std::to_string(limits_.max_atoms) + " atoms)");
        }
        AtomId id = static_cast<AtomId>(task_.atoms.size());
        task_.atom_names.push_back(format_atom_name(task_, predicate, args));
        task_.atoms.push_back({predicate, std::move(args)});
        task_.atom_index_by_key.emplace(std::move(key), id);
        reachable_.push_back(false);
        return id;
    }

    int lookup_atom(int predicate, const std::vector<int>& args) const {
        auto it = task_.atom_index_by_key.find(atom_key(predicate, args));
        if (it == task_.atom_index_by_key.end()) return -1;
        return static_cast<int>(it->second);
    }

    void mark_reachable(AtomId id) {
        if (!reachable_[id]) {
            reachable_[id] = true;
            changed_ = true;
        }
    }

    void seed_reachable() {
        if (domain_.typed) {
            for (std::size_t obj = 0; obj < task_.objects.size(); ++obj) {
                std::string type = task_.objects[obj].type;
                while (type != "object") {
                    AtomId id = add_atom(type_pred_.at(type), {static_cast<int>(obj)});
                    mark_reachable(id);
                    type_atoms_.push_back(id);
                    for (const TypeDecl& t : domain_.types) {
                        if (t.name == type) {
                            type = t.parent;
                            break;
                        }
                    }
                }
            }
        }
        for (const GroundAtomRef& atom : problem_.init) {
            AtomId id = add_atom(atom.predicate, atom.args);
            mark_reachable(id);
            init_ids_.push_back(id);
        }
    }

    // Object indices compatible with each parameter of each schema.
    std::vector<std::vector<int>> candidate_table(const ActionSchema& schema) const {
        std::vector<std::vector<int>> candidates(schema.params.size());
        for (std::size_t p = 0; p < schema.params.size(); ++p) {
            for (std::size_t obj = 0; obj < task_.objects.size(); ++obj) {
                if (domain_.is_subtype(task_.objects[obj].type, schema.params[p].type)) {
                    candidates[p].push_back(static_cast<int>(obj));
                }
            }
        }
        return candidates;
    }

    int resolve_arg(int arg, const std::vector<int>& binding) const {
        return arg >= 0 ? binding[arg] : -(arg + 1);  // constants are objects 0..k-1
    }

    bool atom_reachable(const SchemaAtom& atom, const std::vector<int>& binding) const {
        std::vector<int> args(atom.args.size());
        for (std::size_t i = 0; i < atom.args.size(); ++i) {
            args[i] = resolve_arg(atom.args[i], binding);
        }
        int id = lookup_atom(atom.predicate, args);
        return id >= 0 && reachable_[static_cast<std::size_t>(id)];
    }

    void fixpoint() {
        pending_del_.clear();
        std::vector<std::unordered_set<std::string>> seen_bindings(domain_.schemata.size());
        do {
            changed_ = false;
            for (std::size_t s = 0; s < domain_.schemata.size(); ++s) {
                instantiate_schema(static_cast<int>(s), seen_bindings[s]);
            }
        } while (changed_);
    }

    void instantiate_schema(int schema_index, std::unordered_set<std::string>& seen) {
        const ActionSchema& schema = domain_.schemata[schema_index];
        std::size_t arity = schema.params.size();
        std::vector<std::vector<int>> candidates = candidate_table(schema);
        // Precondition i becomes checkable once params 0..depth_of[i]-1 are
        // bound; constants-only preconditions are checkable at depth 0.
        std::vector<std::vector<int>> checkable(arity + 1);
        for (std::size_t i = 0; i < schema.precondition.size(); ++i) {
            int max_param = -1;
            for (int arg : schema.precondition[i].args) {
                if (arg >= 0) max_param = std::max(max_param, arg);
            }
            checkable[max_param + 1].push_back(static_cast<int>(i));
        }
        std::vector<int> binding(arity, -1);
        std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
            for (int pre : checkable[depth]) {
                if (!atom_reachable(schema.precondition[pre], binding)) return;
            }
            if (depth == arity) {
                emit_action(schema_index, binding, seen);
                return;
            }
            for (int obj : candidates[depth]) {
                binding[depth] = obj;
                recurse(depth + 1);
            }
            binding[depth] = -1;
        };
        recurse(0);
    }

    void emit_action(int schema_index, const std::vector<int>& binding,
                     std::unordered_set<std::string>& seen) {
        std::string key;
        for (int obj : binding) {
            key += std::to_string(obj);
            key.push_back(',');
        }
        if (!seen.insert(key).second) return;
        if (task_.actions.size() >= limits_.max_actions) {
            throw GroundLimitError("action budget exceeded (" +
                                   std::to_string(limits_.max_actions) + " actions)");
        }
        const ActionSchema& schema = domain_.schemata[schema_index];
        GroundAction action;
        action.schema = schema_index;
        action.binding = binding;
        action.name = "(" + schema.name;
        for (int obj : binding) {
            action.name += " " + task_.object_names[obj];
        }
        action.name += ")";
        for (const SchemaAtom& atom : schema.precondition) {
            std::vector<int> args(atom.args.size());
            for (std::size_t i = 0; i < atom.args.size(); ++i) {
                args[i] = resolve_arg(atom.args[i], binding);
            }
            action.pre.push_back(static_cast<AtomId>(lookup_atom(atom.predicate, args)));
        }
        for (const SchemaAtom& atom : schema.add_effects) {
            std::vector<int> args(atom.args.size());
            for (std::size_t i = 0; i < atom.args.size(); ++i) {
                args[i] = resolve_arg(atom.args[i], binding);
            }
            AtomId id = add_atom(atom.predicate, std::move(args));
            mark_reachable(id);
            action.add.push_back(id);
        }
        std::vector<GroundAtom> dels;
        for (const SchemaAtom& atom : schema.del_effects) {
            std::vector<int> args(atom.args.size());
            for (std::size_t i = 0; i < atom.args.size(); ++i) {
                args[i] = resolve_arg(atom.args[i], binding);
            }
            dels.push_back({atom.predicate, std::move(args)});
        }
        pending_del_.push_back(std::move(dels));
        task_.actions.push_back(std::move(action));
    }

    void finish_goal() {
        for (const GroundAtomRef& atom : problem_.goal) {
            task_.goal.push_back(add_atom(atom.predicate, atom.args));
        }
        std::sort(task_.goal.begin(), task_.goal.end());
        task_.goal.erase(std::unique(task_.goal.begin(), task_.goal.end()), task_.goal.end());
    }

    void finish_actions() {
        // Delete effects are resolved only now: an atom may enter the
        // universe in a later sweep than the action that deletes it.
        for (std::size_t i = 0; i < task_.actions.size(); ++i) {
            GroundAction& action = task_.actions[i];
            for (const GroundAtom& atom : pending_del_[i]) {
                int id = lookup_atom(atom.predicate, atom.args);
                if (id >= 0) action.del.push_back(static_cast<AtomId>(id));
            }
            sort_unique(action.pre);
            sort_unique(action.add);
            sort_unique(action.del);
            // Add wins over delete on the same atom.
            std::vector<AtomId> pruned;
            std::set_difference(action.del.begin(), action.del.end(), action.add.begin(),
                                action.add.end(), std::back_inserter(pruned));
            action.del = std::move(pruned);
        }
    }

    void finish_init() {
        std::vector<AtomId> atoms = init_ids_;
        atoms.insert(atoms.end(), type_atoms_.begin(), type_atoms_.end());
        sort_unique(atoms);
        task_.init.atoms = std::move(atoms);
        task_.domain_name = domain_.name;
        task_.problem_name = problem_.name;
    }

    static void sort_unique(std::vector<AtomId>& ids) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }

    const LiftedProblem& problem_;
    const Domain& domain_;
    GroundLimits limits_;
    GroundTask task_;
    std::unordered_map<std::string, int> type_pred_;
    std::vector<bool> reachable_;
    std::vector<AtomId> type_atoms_;
    std::vector<AtomId> init_ids_;
    std::vector<std::vector<GroundAtom>> pending_del_;
    bool changed_ = false;
};

}  // namespace

int GroundTask::find_atom(int predicate, const std::vector<int>& args) const {
    auto it = atom_index_by_key.find(atom_key(predicate, args));
    if (it == atom_index_by_key.end()) return -1;
    return static_cast<int>(it->second);
}

GroundTask ground(const LiftedProblem& problem, const GroundLimits& limits) {
    return Grounder(problem, limits).run();
}

bool applicable(const State& state, const GroundAction& action) {
    return std::includes(state.atoms.begin(), state.atoms.end(), action.pre.begin(),
                         action.pre.end());
}

State apply(const State& state, const GroundAction& action) {
    std::vector<AtomId> removed;
    removed.reserve(state.atoms.size());
    std::set_difference(state.atoms.begin(), state.atoms.end(), action.del.begin(),
                        action.del.end(), std::back_inserter(removed));
    State result;
    result.atoms.reserve(removed.size() + action.add.size());
    std::set_union(removed.begin(), removed.end(), action.add.begin(), action.add.end(),
                   std::back_inserter(result.atoms));
    return result;
}

bool is_goal(const GroundTask& task, const State& state) {
    return std::includes(state.atoms.begin(), state.atoms.end(), task.goal.begin(),
                         task.goal.end());
}

}  // namespace wlnovelty
