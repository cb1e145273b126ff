#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wlnovelty/wl.hpp"

namespace wlnovelty {

// Bijection over the task's object indices.
struct ObjectPermutation {
    std::vector<int> map;  // map[i] = image of object i

    bool is_identity() const;
};

ObjectPermutation identity_permutation(const GroundTask& task);

// Builds a permutation from (from, to) object-name pairs; unnamed objects
// stay fixed. Throws std::invalid_argument if the result is not a
// type-respecting bijection.
ObjectPermutation make_permutation(
    const GroundTask& task, const std::vector<std::pair<std::string, std::string>>& pairs);

// True iff every renamed goal atom is again a goal atom.
bool stabilizes_goal(const GroundTask& task, const ObjectPermutation& permutation);

// Renames every atom of the state; throws std::domain_error if a renamed
// atom falls outside the task's atom universe.
State permute_state(const GroundTask& task, const State& state,
                    const ObjectPermutation& permutation);

// The renamed copy of the state at the struct level, usable even when
// renamed atoms are not in the universe.
IlgInput permuted_ilg_input(const GroundTask& task, const State& state,
                            const ObjectPermutation& permutation);

// Compares the colour multisets of the state's graph and its renamed
// copy, refined with a shared store.
bool check_wl_invariance(const GroundTask& task, const State& state,
                         const ObjectPermutation& permutation, int wl_iterations);

// Uniformly random type-respecting permutation; retries until the goal is
// stabilized, then falls back to permuting only objects that never occur
// in a goal atom.
ObjectPermutation sample_goal_stabilizing_permutation(const GroundTask& task,
                                                      std::mt19937_64& rng);

// Random applicable-action walk from the initial state.
State random_walk(const GroundTask& task, int max_steps, std::mt19937_64& rng);

struct SymcheckOptions {
    int samples = 100;
    int wl_iterations = 2;
    int max_walk_steps = 30;
    std::uint64_t seed = 2024;
};

struct SymcheckReport {
    int samples = 0;
    int passed = 0;
    int identity_permutations = 0;  // samples where only the identity was found
};

SymcheckReport run_symcheck(const GroundTask& task, const SymcheckOptions& options);

}  // namespace wlnovelty
