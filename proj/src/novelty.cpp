#include "wlnovelty/novelty.hpp"

namespace wlnovelty {

std::vector<Feature> FeatureExtractor::extract(const GroundTask& task, const State& state) {
    std::vector<Feature> features;
    if (mode == FeatureMode::Atoms || mode == FeatureMode::AtomsColors) {
        for (AtomId atom : state.atoms) {
            features.push_back({Feature::Atom, static_cast<std::int64_t>(atom), 0});
        }
    }
    if (mode == FeatureMode::Colors || mode == FeatureMode::AtomsColors) {
        FeatureMultiset colors = refine(build_ilg(task, state), wl_iterations, store);
        for (const auto& [color, count] : colors.counts) {
            std::int64_t multiplicity =
                color_feature == ColorFeature::Pair ? static_cast<std::int64_t>(count) : 0;
            features.push_back({Feature::Color, color, multiplicity});
        }
    }
    return features;
}

HeuristicValue NoveltyTable::best(const Feature& feature) const {
    auto it = best_.find(feature);
    return it == best_.end() ? kDeadEnd : it->second;
}

void NoveltyTable::record(const Feature& feature, HeuristicValue value) {
    auto [it, inserted] = best_.try_emplace(feature, value);
    if (!inserted && value < it->second) it->second = value;
}

std::int64_t quantified_both(HeuristicValue base, const std::vector<Feature>& features,
                             NoveltyTable& table) {
    std::int64_t improved = 0;
    std::int64_t worsened = 0;
    for (const Feature& f : features) {
        HeuristicValue seen = table.best(f);
        if (base < seen) {
            ++improved;
        } else if (seen < base) {
            ++worsened;
        }
    }
    for (const Feature& f : features) {
        table.record(f, base);
    }
    return improved > 0 ? -improved : worsened;
}

}  // namespace wlnovelty
