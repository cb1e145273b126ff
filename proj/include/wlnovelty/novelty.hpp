#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wlnovelty/heuristics.hpp"
#include "wlnovelty/wl.hpp"

namespace wlnovelty {

enum class FeatureMode {
    Atoms,         // the state's atoms
    Colors,        // graph colours of the state's instance graph
    AtomsColors,   // disjoint union of both
};

enum class ColorFeature {
    Pair,   // (colour, multiplicity) — the default
    Alone,  // colour only, multiplicities ignored
};

// A single novelty feature. Atom features carry the atom id in `a`;
// colour features carry the colour in `a` and the multiplicity in `b`
// (zero under ColorFeature::Alone). The kind keeps the two spaces
// disjoint in combined mode.
struct Feature {
    enum Kind : std::uint8_t { Atom, Color };

    Kind kind = Atom;
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool operator==(const Feature&) const = default;
};

struct FeatureHash {
    std::size_t operator()(const Feature& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t x : {static_cast<std::uint64_t>(f.kind),
                                static_cast<std::uint64_t>(f.a),
                                static_cast<std::uint64_t>(f.b)}) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct FeatureExtractor {
    FeatureMode mode = FeatureMode::Atoms;
    int wl_iterations = 2;
    ColorFeature color_feature = ColorFeature::Pair;

    // The store persists across calls so colours stay comparable
    // between all states evaluated by one search.
    HashStore store;

    std::vector<Feature> extract(const GroundTask& task, const State& state);
};

// Best heuristic value seen per feature; unseen means "infinity".
class NoveltyTable {
  public:
    HeuristicValue best(const Feature& feature) const;
    void record(const Feature& feature, HeuristicValue value);
    void clear() { best_.clear(); }
    std::size_t size() const { return best_.size(); }

  private:
    std::unordered_map<Feature, HeuristicValue, FeatureHash> best_;
};

// Quantified-both novelty: with N = features strictly better than every
// previous sighting and O = features strictly worse, the value is -|N|
// when N is nonempty, else |O|. The table is updated only after the value
// is computed, so a state never compares against itself.
std::int64_t quantified_both(HeuristicValue base, const std::vector<Feature>& features,
                             NoveltyTable& table);

}  // namespace wlnovelty
