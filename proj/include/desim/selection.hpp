#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "desim/heuristics.hpp"
#include "desim/scorer.hpp"

namespace desim {

// A next-region predictor: one of the closed-form heuristics, a trained
// neighbor scorer, or an injected function (planted policies, scripts).
struct TransitionModel {
    enum class Kind { heuristic, gnn, stay, custom };
    using Fn = std::function<int(const TransitionContext&, const RegionGraph&,
                                 Rng&)>;

    Kind kind = Kind::heuristic;
    Heuristic heuristic = Heuristic::RA;
    std::shared_ptr<const Scorer> scorer;
    std::string custom_name;
    Fn custom_predict; // argmax-style
    Fn custom_sample;  // distribution draw

    static TransitionModel make(Heuristic h);
    static TransitionModel make(std::shared_ptr<const Scorer> s);
    // Never leaves the current region; a scenario control, not a fitted
    // model.
    static TransitionModel make_stay();
    static TransitionModel make_custom(std::string name, Fn predict,
                                       Fn sample);

    std::string name() const; // "RA".."LA" or "GNN"
    // Argmax prediction (RA still draws from rng).
    int predict(const TransitionContext& ctx, const RegionGraph& graph,
                Rng& rng) const;
    // Stochastic prediction: heuristics behave as in predict(); the scorer
    // samples from its softmax.
    int sample(const TransitionContext& ctx, const RegionGraph& graph,
               Rng& rng) const;
};

struct AccuracyResult {
    std::vector<double> per_episode; // one value per usable episode
    double mean = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0; // 95%, t-distribution
    std::size_t skipped = 0;          // episodes with < 2 visits
};

// Fraction of transitions predicted correctly, one value per episode.
AccuracyResult eval_accuracy(const TransitionModel& model, const Corpus& corpus,
                             const RegionGraph& graph,
                             const FeatureRegistry& registry,
                             std::uint64_t seed);

struct SelectionTrial {
    int stage = 0;
    std::string feature;
    double mean_acc = 0.0;
    double sd = 0.0;
    bool chosen = false;
};

struct SelectionResult {
    std::vector<std::string> selected;   // in pick order
    std::vector<SelectionTrial> trials;  // every combination evaluated
};

// Greedy forward selection: stage t adds the candidate feature maximizing
// mean cross-validated top-1 accuracy of a scorer trained on the selected
// set plus that candidate. Uses reduced scorers for tractability.
SelectionResult greedy_select(const Corpus& corpus,
                              const FeatureRegistry& registry,
                              const RegionGraph& graph, std::size_t k,
                              std::size_t folds, std::uint64_t seed,
                              const ScorerConfig& base = reduced_scorer_config());

// stage,feature,mean_acc,sd,chosen
std::string selection_to_csv(const SelectionResult& res);

} // namespace desim
