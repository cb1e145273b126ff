#include "wlnovelty/wl.hpp"

#include <algorithm>

namespace wlnovelty {

Signature canonical_signature(ColorId own, std::vector<std::pair<ColorId, int>> neighbours) {
    std::sort(neighbours.begin(), neighbours.end());
    return {own, std::move(neighbours)};
}

ColorId HashStore::seed_color(const NodeFeature& feature) {
    auto it = seeds_.find(feature);
    if (it != seeds_.end()) return it->second;
    ColorId id = next_++;
    seeds_.emplace(feature, id);
    return id;
}

ColorId HashStore::signature_color(const Signature& signature) {
    auto it = signatures_.find(signature);
    if (it != signatures_.end()) return it->second;
    ColorId id = next_++;
    signatures_.emplace(signature, id);
    return id;
}

std::uint64_t FeatureMultiset::total() const {
    std::uint64_t sum = 0;
    for (const auto& [color, count] : counts) sum += count;
    return sum;
}

FeatureMultiset refine(const LabeledGraph& graph, int iterations, HashStore& store) {
    int n = graph.node_count();
    std::map<ColorId, std::uint32_t> collected;
    std::vector<ColorId> colors(n);
    for (int v = 0; v < n; ++v) {
        colors[v] = store.seed_color(graph.features[v]);
        ++collected[colors[v]];
    }
    std::vector<ColorId> next(n);
    for (int round = 0; round < iterations; ++round) {
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<ColorId, int>> neighbours;
            neighbours.reserve(graph.adjacency[v].size());
            for (const auto& [u, label] : graph.adjacency[v]) {
                neighbours.push_back({colors[u], label});
            }
            next[v] = store.signature_color(
                canonical_signature(colors[v], std::move(neighbours)));
        }
        colors.swap(next);
        for (int v = 0; v < n; ++v) ++collected[colors[v]];
    }
    FeatureMultiset result;
    result.counts.assign(collected.begin(), collected.end());
    return result;
}

}  // namespace wlnovelty
