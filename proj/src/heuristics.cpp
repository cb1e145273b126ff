#include "wlnovelty/heuristics.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace wlnovelty {

HeuristicValue GoalCountHeuristic::evaluate(const State& state) {
    HeuristicValue missing = 0;
    for (AtomId g : task_.goal) {
        if (!state.contains(g)) ++missing;
    }
    return missing;
}

RelaxationHeuristic::RelaxationHeuristic(const GroundTask& task) : task_(task) {
    consumers_.resize(task.atom_count());
    for (std::size_t a = 0; a < task.actions.size(); ++a) {
        const GroundAction& action = task.actions[a];
        if (action.pre.empty()) {
            zero_pre_actions_.push_back(static_cast<int>(a));
        }
        for (AtomId p : action.pre) {
            consumers_[p].push_back(static_cast<int>(a));
        }
    }
    counter_.resize(task.actions.size());
    action_cost_.resize(task.actions.size());
}

bool RelaxationHeuristic::sweep(const State& state) {
    std::size_t n = task_.atom_count();
    cost_.assign(n, kDeadEnd);
    std::vector<bool> finalized(n, false);
    for (std::size_t a = 0; a < task_.actions.size(); ++a) {
        counter_[a] = static_cast<int>(task_.actions[a].pre.size());
        action_cost_[a] = 1;
    }

    using Entry = std::pair<HeuristicValue, AtomId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    auto relax = [&](AtomId atom, HeuristicValue value) {
        if (value < cost_[atom]) {
            cost_[atom] = value;
            queue.push({value, atom});
        }
    };

    for (AtomId atom : state.atoms) relax(atom, 0);
    for (int a : zero_pre_actions_) {
        for (AtomId added : task_.actions[a].add) relax(added, 1);
    }

    while (!queue.empty()) {
        auto [value, atom] = queue.top();
        queue.pop();
        if (finalized[atom]) continue;
        finalized[atom] = true;
        for (int a : consumers_[atom]) {
            action_cost_[a] += value;
            if (--counter_[a] == 0) {
                for (AtomId added : task_.actions[a].add) relax(added, action_cost_[a]);
            }
        }
    }

    for (AtomId g : task_.goal) {
        if (cost_[g] == kDeadEnd) return false;
    }
    return true;
}

HeuristicValue AdditiveHeuristic::evaluate(const State& state) {
    if (!sweep(state)) return kDeadEnd;
    HeuristicValue total = 0;
    for (AtomId g : task_.goal) total += cost_[g];
    return total;
}

HeuristicValue FFHeuristic::evaluate(const State& state) {
    if (!sweep(state)) return kDeadEnd;
    if (achievers_.empty() && task_.atom_count() > 0) {
        achievers_.resize(task_.atom_count());
        for (std::size_t a = 0; a < task_.actions.size(); ++a) {
            for (AtomId added : task_.actions[a].add) {
                achievers_[added].push_back(static_cast<int>(a));
            }
        }
    }

    // Cheapest achiever under the final additive costs; ties fall to the
    // lowest action index because only strict improvements replace.
    auto best_supporter = [&](AtomId atom) {
        int best = -1;
        HeuristicValue best_total = kDeadEnd;
        for (int a : achievers_[atom]) {
            HeuristicValue total = 1;
            for (AtomId p : task_.actions[a].pre) {
                if (cost_[p] == kDeadEnd) {
                    total = kDeadEnd;
                    break;
                }
                total += cost_[p];
            }
            if (total < best_total) {
                best_total = total;
                best = a;
            }
        }
        return best;
    };

    std::unordered_set<int> plan;
    std::vector<bool> queued(task_.atom_count(), false);
    std::vector<AtomId> stack;
    for (AtomId g : task_.goal) {
        if (cost_[g] > 0 && !queued[g]) {
            queued[g] = true;
            stack.push_back(g);
        }
    }
    while (!stack.empty()) {
        AtomId atom = stack.back();
        stack.pop_back();
        int a = best_supporter(atom);
        plan.insert(a);
        for (AtomId p : task_.actions[a].pre) {
            if (cost_[p] > 0 && !queued[p]) {  // cost 0 exactly for state atoms
                queued[p] = true;
                stack.push_back(p);
            }
        }
    }
    return static_cast<HeuristicValue>(plan.size());
}

std::unique_ptr<Heuristic> make_heuristic(const std::string& name, const GroundTask& task) {
    if (name == "gc") return std::make_unique<GoalCountHeuristic>(task);
    if (name == "add") return std::make_unique<AdditiveHeuristic>(task);
    if (name == "ff") return std::make_unique<FFHeuristic>(task);
    throw std::invalid_argument("unknown heuristic '" + name + "'");
}

}  // namespace wlnovelty
