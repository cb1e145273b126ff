#include "wlnovelty/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wlnovelty {

bool ObjectPermutation::is_identity() const {
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] != static_cast<int>(i)) return false;
    }
    return true;
}

ObjectPermutation identity_permutation(const GroundTask& task) {
    ObjectPermutation p;
    p.map.resize(task.objects.size());
    for (std::size_t i = 0; i < p.map.size(); ++i) p.map[i] = static_cast<int>(i);
    return p;
}

namespace {

void validate_permutation(const GroundTask& task, const ObjectPermutation& p) {
    if (p.map.size() != task.objects.size()) {
        throw std::invalid_argument("permutation does not cover every object");
    }
    std::vector<bool> hit(p.map.size(), false);
    for (std::size_t i = 0; i < p.map.size(); ++i) {
        int image = p.map[i];
        if (image < 0 || image >= static_cast<int>(p.map.size()) || hit[image]) {
            throw std::invalid_argument("permutation is not a bijection");
        }
        hit[image] = true;
        if (task.objects[i].type != task.objects[image].type) {
            throw std::invalid_argument("permutation maps '" + task.objects[i].name +
                                        "' to '" + task.objects[image].name +
                                        "' of a different type");
        }
    }
}

std::vector<int> renamed_args(const std::vector<int>& args, const ObjectPermutation& p) {
    std::vector<int> out(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) out[i] = p.map[args[i]];
    return out;
}

}  // namespace

ObjectPermutation make_permutation(
    const GroundTask& task, const std::vector<std::pair<std::string, std::string>>& pairs) {
    ObjectPermutation p = identity_permutation(task);
    auto object_id = [&](const std::string& name) {
        for (std::size_t i = 0; i < task.object_names.size(); ++i) {
            if (task.object_names[i] == name) return static_cast<int>(i);
        }
        throw std::invalid_argument("unknown object '" + name + "'");
    };
    for (const auto& [from, to] : pairs) {
        p.map[object_id(from)] = object_id(to);
    }
    validate_permutation(task, p);
    return p;
}

bool stabilizes_goal(const GroundTask& task, const ObjectPermutation& permutation) {
    for (AtomId g : task.goal) {
        int renamed = task.find_atom(task.atoms[g].predicate,
                                     renamed_args(task.atoms[g].args, permutation));
        if (renamed < 0 ||
            !std::binary_search(task.goal.begin(), task.goal.end(),
                                static_cast<AtomId>(renamed))) {
            return false;
        }
    }
    return true;
}

State permute_state(const GroundTask& task, const State& state,
                    const ObjectPermutation& permutation) {
    validate_permutation(task, permutation);
    State result;
    result.atoms.reserve(state.atoms.size());
    for (AtomId atom : state.atoms) {
        int renamed = task.find_atom(task.atoms[atom].predicate,
                                     renamed_args(task.atoms[atom].args, permutation));
        if (renamed < 0) {
            throw std::domain_error("renaming '" + task.atom_names[atom] +
                                    "' leaves the grounded atom universe");
        }
        result.atoms.push_back(static_cast<AtomId>(renamed));
    }
    std::sort(result.atoms.begin(), result.atoms.end());
    result.atoms.erase(std::unique(result.atoms.begin(), result.atoms.end()),
                       result.atoms.end());
    return result;
}

IlgInput permuted_ilg_input(const GroundTask& task, const State& state,
                            const ObjectPermutation& permutation) {
    validate_permutation(task, permutation);
    // (in state, in goal) flags keyed by renamed atom, emitted in sorted
    // order so the result does not depend on the permutation itself.
    std::map<std::pair<int, std::vector<int>>, std::pair<bool, bool>> entries;
    for (AtomId atom : state.atoms) {
        entries[{task.atoms[atom].predicate, renamed_args(task.atoms[atom].args, permutation)}]
            .first = true;
    }
    for (AtomId g : task.goal) {
        entries[{task.atoms[g].predicate, task.atoms[g].args}].second = true;
    }
    IlgInput input;
    input.object_names = task.object_names;
    for (const auto& [key, flags] : entries) {
        IlgAtom atom;
        atom.predicate = key.first;
        atom.objects = key.second;
        atom.in_state = flags.first;
        atom.in_goal = flags.second;
        atom.name = task.predicate_names[key.first];
        if (!key.second.empty()) {
            atom.name.push_back('(');
            for (std::size_t i = 0; i < key.second.size(); ++i) {
                if (i > 0) atom.name.push_back(',');
                atom.name += task.object_names[key.second[i]];
            }
            atom.name.push_back(')');
        }
        input.atoms.push_back(std::move(atom));
    }
    return input;
}

bool check_wl_invariance(const GroundTask& task, const State& state,
                         const ObjectPermutation& permutation, int wl_iterations) {
    HashStore store;
    FeatureMultiset original =
        refine(build_ilg(task, state), wl_iterations, store);
    FeatureMultiset renamed = refine(
        build_ilg_graph(permuted_ilg_input(task, state, permutation)), wl_iterations, store);
    return original == renamed;
}

ObjectPermutation sample_goal_stabilizing_permutation(const GroundTask& task,
                                                      std::mt19937_64& rng) {
    std::map<std::string, std::vector<int>> classes;  // ordered: reproducible sampling
    for (std::size_t i = 0; i < task.objects.size(); ++i) {
        classes[task.objects[i].type].push_back(static_cast<int>(i));
    }
    auto shuffle_classes = [&](const std::vector<bool>& frozen) {
        ObjectPermutation p = identity_permutation(task);
        for (auto& [type, members] : classes) {
            std::vector<int> movable;
            for (int obj : members) {
                if (!frozen[obj]) movable.push_back(obj);
            }
            std::vector<int> images = movable;
            std::shuffle(images.begin(), images.end(), rng);
            for (std::size_t i = 0; i < movable.size(); ++i) {
                p.map[movable[i]] = images[i];
            }
        }
        return p;
    };

    std::vector<bool> none(task.objects.size(), false);
    for (int attempt = 0; attempt < 50; ++attempt) {
        ObjectPermutation p = shuffle_classes(none);
        if (stabilizes_goal(task, p)) return p;
    }
    // Freezing every object that occurs in a goal atom stabilizes the
    // goal pointwise.
    std::vector<bool> frozen(task.objects.size(), false);
    for (AtomId g : task.goal) {
        for (int obj : task.atoms[g].args) frozen[obj] = true;
    }
    return shuffle_classes(frozen);
}

State random_walk(const GroundTask& task, int max_steps, std::mt19937_64& rng) {
    State state = task.init;
    int steps = max_steps > 0
                    ? static_cast<int>(std::uniform_int_distribution<int>(0, max_steps)(rng))
                    : 0;
    for (int i = 0; i < steps; ++i) {
        std::vector<int> options;
        for (std::size_t a = 0; a < task.actions.size(); ++a) {
            if (applicable(state, task.actions[a])) options.push_back(static_cast<int>(a));
        }
        if (options.empty()) break;
        int pick = std::uniform_int_distribution<int>(
            0, static_cast<int>(options.size()) - 1)(rng);
        state = apply(state, task.actions[options[pick]]);
    }
    return state;
}

SymcheckReport run_symcheck(const GroundTask& task, const SymcheckOptions& options) {
    std::mt19937_64 rng(options.seed);
    SymcheckReport report;
    for (int i = 0; i < options.samples; ++i) {
        State state = random_walk(task, options.max_walk_steps, rng);
        ObjectPermutation p = sample_goal_stabilizing_permutation(task, rng);
        if (p.is_identity()) ++report.identity_permutations;
        ++report.samples;
        if (check_wl_invariance(task, state, p, options.wl_iterations)) ++report.passed;
    }
    return report;
}

}  // namespace wlnovelty
