#pragma once

#include <string>
#include <vector>

#include "desim/engine.hpp"
#include "desim/selection.hpp"
#include "desim/stats.hpp"

namespace desim {

// One episode reduced to the four headline outcomes.
struct EpisodeSummary {
    double nodes = 0.0;
    double time = 0.0; // NaN when the episode has no timed visits
    double shots = 0.0;
    double victims = 0.0;
};

std::vector<EpisodeSummary> summarize(const Corpus& corpus);
std::vector<EpisodeSummary> summarize(const std::vector<RolloutLog>& logs);

enum class MatchColor { green, yellow, red };
const char* color_name(MatchColor c);

struct OutcomeFidelity {
    std::string outcome;
    double gen_mean = 0.0, gen_sd = 0.0;
    double obs_mean = 0.0, obs_sd = 0.0;
    TestResult welch;  // mean match
    TestResult levene; // variance match
    MatchColor color = MatchColor::red;
};

struct SpatialTemporal {
    double jsd_time = 0.0, jsd_shots = 0.0, jsd_victims = 0.0;
    double rho_ts_model = 0.0, rho_ts_emp = 0.0, d_rho_ts = 0.0;
    double rho_tv_model = 0.0, rho_tv_emp = 0.0, d_rho_tv = 0.0;
};

struct FidelityReport {
    std::vector<OutcomeFidelity> outcomes; // nodes, time, shots, victims
    SpatialTemporal st;
};

// Fraction of the outcome's total mass in each region (index order).
std::vector<double> spatial_share(const Corpus& corpus,
                                  const RegionGraph& graph, OutcomeKind o);

// JSD between the two samples' value distributions over shared equal-width
// bins.
double value_jsd(const std::vector<double>& gen, const std::vector<double>& obs,
                 int bins = 20);

// Compares generated rollouts against observed episodes: Welch/Levene per
// outcome with the traffic-light match color, spatial JSD per outcome, and
// dwell-vs-outcome rank correlations with their deviations.
FidelityReport fidelity_report(const Corpus& generated, const Corpus& observed,
                               const RegionGraph& graph);

struct VariantRow {
    std::string pooling;
    std::string variant;
    FidelityReport rep;
};

// Episode-outcome table: one participants reference row, then one row per
// generation variant with "mean ± sd" cells, check/cross marks, and the
// match color.
std::string outcomes_table_csv(const std::vector<EpisodeSummary>& observed,
                               const std::vector<VariantRow>& rows);

// Spatial/temporal fidelity table per variant.
std::string fidelity_table_csv(const std::vector<VariantRow>& rows);

struct StrategyRow {
    std::string strategy;
    double sf_mean = 0.0, sf_sd = 0.0; // single-floor
    double mf_mean = 0.0, mf_sd = 0.0; // multi-floor
};

// Victim outcomes per robot strategy with percent deltas against the
// first row (the no-robot baseline).
std::string strategy_table_csv(const std::vector<StrategyRow>& rows);

struct ModelComparisonRow {
    std::string model;
    double mean = 0.0, ci_lo = 0.0, ci_hi = 0.0;
    std::string stars; // significance vs the reference model
};

// Per-model accuracy with a Welch test against the reference model (the
// GNN when present, otherwise the best mean).
std::vector<ModelComparisonRow> compare_models(
    const std::vector<TransitionModel>& models, const Corpus& corpus,
    const RegionGraph& graph, const FeatureRegistry& registry,
    std::uint64_t seed);

std::string comparison_csv(const std::vector<ModelComparisonRow>& rows);

std::string fidelity_report_json(const FidelityReport& rep);

} // namespace desim
