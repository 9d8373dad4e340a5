#pragma once

#include <array>
#include <string>
#include <vector>

#include "desim/event_model.hpp"
#include "desim/moments.hpp"
#include "desim/records.hpp"
#include "desim/region_graph.hpp"

namespace desim {

// Per-region smoke intensity plus the deposition history that produced it.
// Intensities only accumulate by default; an exponential time-decay hook
// exists but is off unless a positive rate is applied explicitly.
struct SmokeField {
    std::vector<double> intensity;
    std::vector<SmokeEvent> history;

    SmokeField() = default;
    explicit SmokeField(std::size_t regions) : intensity(regions, 0.0) {}

    void deposit(std::size_t region_idx, int region_id, double amount,
                 double t);
    void decay(double dt, double rate);
    bool empty() const;
};

// R_i = sum_j intensity_j * exp(-lambda * D_ij); unreachable pairs
// contribute nothing.
std::vector<double> influence(const SmokeField& smoke, const RegionGraph& graph,
                              double lambda);
double influence_at(const SmokeField& smoke, const RegionGraph& graph,
                    double lambda, std::size_t region_idx);

struct EffectCoeff {
    double k = 0.0;
    bool suppressed = false;
    long long n = 0;
};

struct EffectModel {
    double lambda = 0.5;
    double tau = 10.0;
    std::vector<std::array<EffectCoeff, kOutcomeCount>> coeff; // region idx

    double k(std::size_t region_idx, OutcomeKind o) const {
        return coeff[region_idx][static_cast<int>(o)].k;
    }
};

inline constexpr double kLambdaDefault = 0.5;
inline constexpr double kTauDefault = 10.0;
inline constexpr double kVarGuard = 1e-9;
std::vector<double> default_lambda_grid(); // 0.05 .. 2.0 step 0.05

// Additive modulation of one outcome triple, clamped to physical bounds
// (everything >= 0; victims also capped).
OutcomeTriple modulate(const OutcomeTriple& x, double R,
                       const EffectModel& model, std::size_t region_idx,
                       double victims_cap);

// Shrinkage-weighted slopes per (region, outcome): k = Cov(R,e)/Var(R)
// scaled by n/(n+tau), suppressed to zero on sparse or degenerate cells.
// Residuals are taken against the baseline table's resolved means.
EffectModel fit_coeffs(const MomentTable& baseline, const Corpus& robot_corpus,
                       const RegionGraph& graph, double tau,
                       int n_min = 8);

// Per-visit influence recomputed from an episode's smoke history at each
// visit start, for a given lambda.
std::vector<double> recompute_influence(const Episode& ep,
                                        const RegionGraph& graph,
                                        double lambda);

struct LambdaScore {
    double lambda = 0.0;
    double score = 0.0;
};

struct CalibrationResult {
    double lambda = 0.0;
    std::vector<LambdaScore> curve;
    bool degenerate = false; // flat score curve
};

// Grid search: episodes split by parity into fit/held-out halves; each
// lambda refits coefficients and is scored by the total squared residual
// of modulated predictions on the held-out half. Ties take the smaller
// lambda.
CalibrationResult calibrate_lambda(const MomentTable& baseline,
                                   const Corpus& robot_corpus,
                                   const RegionGraph& graph,
                                   const std::vector<double>& grid,
                                   double tau, int n_min = 8);

enum class ImpactMode { rate, raw };

// Regions ordered by victim-outcome sensitivity, most negative first.
// Rate mode divides the slope by the region's resolved mean dwell.
std::vector<std::size_t> impact_rank(const EffectModel& model,
                                     const MomentTable& baseline,
                                     const RegionGraph& graph,
                                     ImpactMode mode = ImpactMode::rate,
                                     int n_min = 8);

std::string effect_model_to_json(const EffectModel& model,
                                 const RegionGraph& graph);
EffectModel effect_model_from_json(const std::string& text,
                                   const RegionGraph& graph);

} // namespace desim
