#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wlnovelty/ilg.hpp"

namespace wlnovelty {

using ColorId = std::int32_t;

// Refinement signature: a node's own colour plus the canonically ordered
// multiset of (neighbour colour, edge label) pairs.
struct Signature {
    ColorId own = 0;
    std::vector<std::pair<ColorId, int>> neighbours;  // sorted, duplicates kept

    bool operator==(const Signature&) const = default;
    bool operator<(const Signature& other) const {
        if (own != other.own) return own < other.own;
        return neighbours < other.neighbours;
    }
};

Signature canonical_signature(ColorId own, std::vector<std::pair<ColorId, int>> neighbours);

// Injective colour assignment shared across every refinement performed
// with the same store: unseen seed features and unseen signatures receive
// the next free id, in encounter order. Persisting one store across all
// states of a search keeps colours comparable between states.
class HashStore {
  public:
    ColorId seed_color(const NodeFeature& feature);
    ColorId signature_color(const Signature& signature);

    ColorId size() const { return next_; }

  private:
    std::map<NodeFeature, ColorId> seeds_;
    std::map<Signature, ColorId> signatures_;
    ColorId next_ = 0;
};

// (colour, multiplicity) pairs sorted by colour.
struct FeatureMultiset {
    std::vector<std::pair<ColorId, std::uint32_t>> counts;

    bool operator==(const FeatureMultiset&) const = default;
    std::uint64_t total() const;
};

// Runs `iterations` refinement rounds and returns the multiset of colours
// collected from every round including the initial colouring, so the
// total count is (iterations + 1) * node_count.
FeatureMultiset refine(const LabeledGraph& graph, int iterations, HashStore& store);

}  // namespace wlnovelty
