#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlnovelty/pddl.hpp"

namespace wlnovelty {

using AtomId = std::uint32_t;

// Sorted duplicate-free atom-id set.
struct State {
    std::vector<AtomId> atoms;

    bool contains(AtomId atom) const;
    bool operator==(const State&) const = default;
};

struct StateHash {
    std::size_t operator()(const State& state) const;
};

struct GroundAtom {
    int predicate = -1;
    std::vector<int> args;  // object indices
};

struct GroundAction {
    std::string name;  // "(schema arg1 arg2 ...)"
    int schema = -1;
    std::vector<int> binding;  // object index per schema parameter
    std::vector<AtomId> pre;   // sorted
    std::vector<AtomId> add;   // sorted
    std::vector<AtomId> del;   // sorted, disjoint from add
};

struct GroundLimits {
    std::size_t max_atoms = 1000000;
    std::size_t max_actions = 10000000;
};

class GroundLimitError : public std::runtime_error {
  public:
    explicit GroundLimitError(const std::string& message) : std::runtime_error(message) {}
};

// Thrown for inputs the grounder cannot represent (e.g. name collisions
// between types and predicates).
class GroundError : public std::runtime_error {
  public:
    explicit GroundError(const std::string& message) : std::runtime_error(message) {}
};

struct GroundTask {
    std::string domain_name;
    std::string problem_name;

    // Domain predicates first, then one unary predicate per declared type.
    std::vector<std::string> predicate_names;
    std::vector<int> predicate_arity;
    int first_type_predicate = 0;  // == number of domain predicates

    std::vector<TypedName> objects;
    std::vector<std::string> object_names;  // convenience copy, same order

    // Atom universe: delete-relaxed reachable atoms plus goal atoms, in
    // discovery order. Static atoms (never added or deleted) are included.
    std::vector<GroundAtom> atoms;
    std::vector<std::string> atom_names;  // "pred(a,b)"

    std::vector<GroundAction> actions;

    State init;                 // includes type atoms for typed domains
    std::vector<AtomId> goal;   // sorted

    AtomId atom_count() const { return static_cast<AtomId>(atoms.size()); }
    // -1 when the atom is not part of the universe.
    int find_atom(int predicate, const std::vector<int>& args) const;

    std::unordered_map<std::string, AtomId> atom_index_by_key;  // "pred|a|b"
};

GroundTask ground(const LiftedProblem& problem, const GroundLimits& limits = {});

bool applicable(const State& state, const GroundAction& action);
State apply(const State& state, const GroundAction& action);
bool is_goal(const GroundTask& task, const State& state);

}  // namespace wlnovelty
