#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tasks.hpp"
#include "wlnovelty/novelty.hpp"
#include "wlnovelty/search.hpp"

using namespace wlnovelty;

TEST_CASE("atom features mirror the state") {
    GroundTask task = tasks::ground_text(tasks::gripper_micro_domain_text(),
                                         tasks::gripper_micro_problem_text());
    FeatureExtractor extractor;
    extractor.mode = FeatureMode::Atoms;
    std::vector<Feature> features = extractor.extract(task, task.init);
    REQUIRE(features.size() == task.init.atoms.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        CHECK(features[i].kind == Feature::Atom);
        CHECK(features[i].a == static_cast<std::int64_t>(task.init.atoms[i]));
        CHECK(features[i].b == 0);
    }
}

TEST_CASE("colour features are the refinement multiset") {
    GroundTask task = tasks::ground_text(tasks::gripper_micro_domain_text(),
                                         tasks::gripper_micro_problem_text());
    FeatureExtractor extractor;
    extractor.mode = FeatureMode::Colors;
    extractor.wl_iterations = 2;
    std::vector<Feature> features = extractor.extract(task, task.init);

    HashStore store;
    FeatureMultiset expected = refine(build_ilg(task, task.init), 2, store);
    REQUIRE(features.size() == expected.counts.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        CHECK(features[i].kind == Feature::Color);
        CHECK(features[i].a == expected.counts[i].first);
        CHECK(features[i].b == static_cast<std::int64_t>(expected.counts[i].second));
    }
}

TEST_CASE("combined mode keeps the two feature spaces disjoint") {
    GroundTask task = tasks::ground_text(tasks::gripper_micro_domain_text(),
                                         tasks::gripper_micro_problem_text());
    FeatureExtractor atoms_only, colors_only, both;
    atoms_only.mode = FeatureMode::Atoms;
    colors_only.mode = FeatureMode::Colors;
    both.mode = FeatureMode::AtomsColors;
    std::vector<Feature> a = atoms_only.extract(task, task.init);
    std::vector<Feature> c = colors_only.extract(task, task.init);
    std::vector<Feature> ac = both.extract(task, task.init);
    CHECK(ac.size() == a.size() + c.size());
    // Identical (a, b) payloads can coexist because the kind differs.
    for (const Feature& f : ac) {
        bool in_atoms = std::find(a.begin(), a.end(), f) != a.end();
        bool in_colors = std::find(c.begin(), c.end(), f) != c.end();
        CHECK(in_atoms != in_colors);
    }
}

TEST_CASE("multiplicities can be dropped from colour features") {
    GroundTask task = tasks::ground_text(tasks::blocks_domain_text(),
                                         tasks::blocks2_problem_text("(on a b)"));
    FeatureExtractor plain;
    plain.mode = FeatureMode::Colors;
    plain.color_feature = ColorFeature::Alone;
    std::vector<Feature> features = plain.extract(task, task.init);
    for (const Feature& f : features) CHECK(f.b == 0);

    FeatureExtractor with_counts;
    with_counts.mode = FeatureMode::Colors;
    std::vector<Feature> paired = with_counts.extract(task, task.init);
    CHECK(features.size() == paired.size());  // same colour classes either way
}

TEST_CASE("fresh table: the first state improves every feature") {
    NoveltyTable table;
    std::vector<Feature> features = {{Feature::Atom, 3, 0},
                                     {Feature::Atom, 7, 0},
                                     {Feature::Color, 2, 1}};
    CHECK(quantified_both(5, features, table) == -3);
    CHECK(table.size() == 3);
}

TEST_CASE("re-evaluating the same state at the same value is neutral") {
    NoveltyTable table;
    std::vector<Feature> features = {{Feature::Atom, 1, 0}, {Feature::Atom, 2, 0}};
    CHECK(quantified_both(4, features, table) == -2);
    CHECK(quantified_both(4, features, table) == 0);
    CHECK(quantified_both(4, features, table) == 0);
}

TEST_CASE("equal flat novelty, distinguishable improvements") {
    // Two states with identical features: the first arrives with h = 9,
    // the second with h = 7. A plain seen/unseen flag treats the second
    // as nothing new; counting improvements does not.
    std::vector<Feature> features = {{Feature::Atom, 0, 0},
                                     {Feature::Atom, 1, 0},
                                     {Feature::Atom, 2, 0}};
    NoveltyTable table;
    std::int64_t first = quantified_both(9, features, table);
    std::int64_t second = quantified_both(7, features, table);
    CHECK(first == -3);
    CHECK(second == -3);  // every feature improved on its previous best of 9

    oracles::PresenceNovelty presence;
    CHECK(presence.evaluate(features));
    CHECK_FALSE(presence.evaluate(features));  // flat novelty stops caring
}

TEST_CASE("improved and worsened features count against each other") {
    NoveltyTable table;
    Feature f1{Feature::Atom, 1, 0};
    Feature f2{Feature::Atom, 2, 0};
    CHECK(quantified_both(5, {f1, f2}, table) == -2);
    // f1 improves (3 < 5): negative regardless of f2's state.
    CHECK(quantified_both(3, {f1}, table) == -1);
    // f2 worsens (7 > 5) and nothing improves: positive count.
    CHECK(quantified_both(7, {f2}, table) == 1);
    // f1 at its recorded best of 3: neither new nor old.
    CHECK(quantified_both(3, {f1}, table) == 0);
}

TEST_CASE("the table keeps minima and can be cleared") {
    NoveltyTable table;
    Feature f{Feature::Color, 9, 2};
    CHECK(table.best(f) == kDeadEnd);
    table.record(f, 6);
    CHECK(table.best(f) == 6);
    table.record(f, 8);
    CHECK(table.best(f) == 6);
    table.record(f, 2);
    CHECK(table.best(f) == 2);
    table.clear();
    CHECK(table.best(f) == kDeadEnd);
    CHECK(table.size() == 0);
}

TEST_CASE("random traces match the replay oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> feature_id(0, 9);
    std::uniform_int_distribution<int> value(0, 6);
    std::uniform_int_distribution<int> count(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        NoveltyTable table;
        oracles::ReplayNoveltyOracle oracle;
        for (int step = 0; step < 40; ++step) {
            std::vector<Feature> features;
            int k = count(rng);
            std::vector<int> used;
            while (static_cast<int>(features.size()) < k) {
                int id = feature_id(rng);
                if (std::find(used.begin(), used.end(), id) != used.end()) continue;
                used.push_back(id);
                features.push_back({Feature::Atom, id, 0});
            }
            HeuristicValue h = value(rng);
            CHECK(quantified_both(h, features, table) == oracle.evaluate(h, features));
        }
    }
}

TEST_CASE("dead ends bypass the feature table entirely") {
    GroundTask task = tasks::ground_text(
        tasks::chain_domain_text(),
        "(define (problem stuck) (:domain chain) (:objects n1 n2)"
        " (:init (at n2) (next n1 n2)) (:goal (at n1)))");
    auto heuristic = make_heuristic("ff", task);
    NoveltyEvaluator evaluator(task, *heuristic, FeatureMode::AtomsColors, 2,
                               ColorFeature::Pair);
    CHECK(evaluator.evaluate(task.init) == Evaluator::kPruned);
    CHECK(evaluator.table().size() == 0);
}

TEST_CASE("novelty values through the evaluator wrap the base heuristic") {
    GroundTask task = tasks::ground_text(tasks::chain_domain_text(),
                                         tasks::chain_problem_text(3, 3));
    auto heuristic = make_heuristic("add", task);
    NoveltyEvaluator evaluator(task, *heuristic, FeatureMode::Atoms, 2,
                               ColorFeature::Pair);
    // First state: everything new. |features| = |init| = 1 at + 2 next.
    CHECK(evaluator.evaluate(task.init) == -3);
    int step = -1;
    for (std::size_t a = 0; a < task.actions.size(); ++a) {
        if (applicable(task.init, task.actions[a])) step = static_cast<int>(a);
    }
    REQUIRE(step >= 0);
    std::int64_t second = evaluator.evaluate(apply(task.init, task.actions[step]));
    CHECK(second < 0);  // at(n2) never sighted, h dropped as well
}
