#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "desim/features.hpp"
#include "desim/moments.hpp"
#include "desim/records.hpp"
#include "desim/region_graph.hpp"
#include "desim/selection.hpp"

namespace desim {

// Built-in two-floor school layout (24 regions) used by the demo pipeline
// and the end-to-end tests. Kept small so the joint robot action space
// stays tractable.
std::string synth_school_json();
RegionGraph synth_school();

// Ground-truth per-region outcome moments for a layout: group-scaled
// means with deterministic per-region jitter, variances well inside the
// symmetric-truncation limit, victim caps at twice the mean. Group and
// global cells hold the exact pooled mixture moments.
MomentTable synth_moments(const RegionGraph& graph, long long n_per_region = 40);

// Feature weights of the planted movement policy (betweenness-dominant).
using PlantedWeights = std::vector<std::pair<std::string, double>>;
PlantedWeights default_planted_weights();

// Softmax policy over registry features; usable as an engine transition
// model and as the recovery target in the scorer tests.
TransitionModel planted_transition(const FeatureRegistry& registry,
                                   PlantedWeights weights,
                                   double temperature = 1.0);

struct SynthConfig {
    int episodes = 60;
    double t_max = 300.0;
    double temperature = 1.0;
    std::uint64_t seed = 1;
};

// Baseline-condition corpus: planted softmax transitions, outcomes drawn
// through the moment-matched machinery, episodes ending on the event that
// crosses t_max (final event untruncated).
Corpus synth_corpus(const RegionGraph& graph, const MomentTable& table,
                    const FeatureRegistry& registry, const PlantedWeights& pw,
                    const SynthConfig& cfg);

// Fraction of corpus transitions where the planted policy's own argmax
// matches the realized move: the recovery ceiling for any trained model.
double planted_self_accuracy(const Corpus& corpus, const RegionGraph& graph,
                             const FeatureRegistry& registry,
                             const PlantedWeights& pw);

// Per-region visits with uniform influence values and outcomes
//   X = resolved_mean(outcome) + offset + k * R + noise,
// a linear response whose slopes fit_coeffs should recover. The offset
// keeps values positive without touching the slope.
Corpus planted_effect_corpus(const RegionGraph& graph, const MomentTable& base,
                             double k_time, double k_shots, double k_victims,
                             int visits_per_region, double noise_sd,
                             double offset, std::uint64_t seed);

// Episodes with smoke deposition histories; shot and victim outcomes carry
// an exponential-distance response at the given lambda. Dwell stays at the
// baseline mean so visit start times are independent of the effect.
Corpus planted_lambda_corpus(const RegionGraph& graph, const MomentTable& base,
                             double lambda, double k_shots, double k_victims,
                             double offset, int episodes, double noise_sd,
                             std::uint64_t seed);

} // namespace desim
