#include "wlnovelty/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <queue>
#include <unordered_map>

namespace wlnovelty {

std::size_t resident_memory_mb() {
    std::ifstream statm("/proc/self/statm");
    std::size_t pages_total = 0, pages_resident = 0;
    if (statm >> pages_total >> pages_resident) {
        static const std::size_t page_size = 4096;
        return pages_resident * page_size / (1024 * 1024);
    }
    return 0;
}

namespace {

struct OpenEntry {
    std::int64_t value;
    std::uint64_t sequence;
    std::uint32_t node;

    bool operator>(const OpenEntry& other) const {
        if (value != other.value) return value > other.value;
        return sequence > other.sequence;
    }
};

struct Node {
    State state;
    std::int32_t parent;
    std::int32_t action;
};

}  // namespace

SearchResult gbfs(const GroundTask& task, Evaluator& evaluator, const SearchLimits& limits) {
    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    };

    SearchResult result;
    SearchStats& stats = result.stats;

    std::vector<Node> nodes;
    std::unordered_map<State, std::uint32_t, StateHash> seen;
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<OpenEntry>> open;
    std::uint64_t sequence = 0;

    auto extract_plan = [&](std::uint32_t node) {
        Plan plan;
        while (nodes[node].parent >= 0) {
            plan.push_back(nodes[node].action);
            node = static_cast<std::uint32_t>(nodes[node].parent);
        }
        std::reverse(plan.begin(), plan.end());
        return plan;
    };

    nodes.push_back({task.init, -1, -1});
    seen.emplace(task.init, 0);
    ++stats.evaluations;
    std::int64_t init_value = evaluator.evaluate(task.init);
    if (init_value != Evaluator::kPruned) {
        open.push({init_value, sequence++, 0});
        stats.peak_open = 1;
    }

    while (!open.empty()) {
        if (limits.time_seconds > 0 && elapsed() > limits.time_seconds) {
            result.outcome = Outcome::ResourceLimit;
            stats.wall_seconds = elapsed();
            return result;
        }
        if (limits.memory_mb > 0 && stats.expansions % 256 == 0 &&
            resident_memory_mb() > limits.memory_mb) {
            result.outcome = Outcome::ResourceLimit;
            stats.wall_seconds = elapsed();
            return result;
        }

        OpenEntry entry = open.top();
        open.pop();
        const std::uint32_t current = entry.node;

        if (is_goal(task, nodes[current].state)) {
            result.outcome = Outcome::Solved;
            result.plan = extract_plan(current);
            stats.wall_seconds = elapsed();
            return result;
        }

        if (limits.max_expansions > 0 && stats.expansions >= limits.max_expansions) {
            result.outcome = Outcome::ResourceLimit;
            stats.wall_seconds = elapsed();
            return result;
        }
        ++stats.expansions;

        for (std::size_t a = 0; a < task.actions.size(); ++a) {
            const GroundAction& action = task.actions[a];
            if (!applicable(nodes[current].state, action)) continue;
            State successor = apply(nodes[current].state, action);
            ++stats.generated;
            if (seen.find(successor) != seen.end()) continue;

            ++stats.evaluations;
            std::int64_t value = evaluator.evaluate(successor);
            std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
            seen.emplace(successor, id);
            nodes.push_back({std::move(successor), static_cast<std::int32_t>(current),
                             static_cast<std::int32_t>(a)});
            if (value == Evaluator::kPruned) continue;
            open.push({value, sequence++, id});
            stats.peak_open = std::max(stats.peak_open, open.size());
        }
    }

    result.outcome = Outcome::ProvedUnsolvable;
    stats.wall_seconds = elapsed();
    return result;
}

bool validate(const GroundTask& task, const Plan& plan) {
    State state = task.init;
    for (int a : plan) {
        if (a < 0 || static_cast<std::size_t>(a) >= task.actions.size()) return false;
        const GroundAction& action = task.actions[a];
        if (!applicable(state, action)) return false;
        state = apply(state, action);
    }
    return is_goal(task, state);
}

std::string plan_to_text(const GroundTask& task, const Plan& plan) {
    std::string text;
    for (int a : plan) {
        text += task.actions[a].name;
        text.push_back('\n');
    }
    return text;
}

}  // namespace wlnovelty
