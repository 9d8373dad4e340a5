#pragma once

#include <string>

#include "desim/moments.hpp"
#include "desim/rng.hpp"

namespace desim {

// Physical bounds for one outcome draw. L is 0 for every outcome here;
// U is finite for time (episode budget) and victims (observed max),
// infinite for shots.
struct Bounds {
    double L = 0.0;
    double U = kInf;
};

// Largest half-width h such that [m-h, m+h] stays inside the bounds.
// Requires L < m < U.
double feasible_halfwidth(double m, Bounds bounds);

// Truncated-normal sampling spec. The interval is symmetric about mu0 by
// construction, which makes the post-truncation mean equal mu0 and the
// post-truncation variance strictly monotone in sigma0.
struct TruncSpec {
    double mu0 = 0.0;
    double sigma0 = 1.0;
    double a = 0.0;
    double b = 0.0;
    bool deterministic = false; // sample() returns mu0 exactly
    bool clamped = false;       // target variance was at/above the uniform limit
};

struct TruncMoments {
    double mean = 0.0;
    double var = 0.0;
};

// Closed-form post-truncation moments. For a symmetric interval the
// returned mean is mu0 exactly.
TruncMoments trunc_moments(const TruncSpec& spec);

// Inverts trunc_moments in sigma0 by bisection so the post-truncation
// variance hits s2 (relative 1e-8). Targets at or above 0.98 of the
// uniform limit h^2/3 are clamped to that value and flagged; s2 = 0
// yields a deterministic spec.
TruncSpec match_moments(double m, double s2, Bounds bounds);

// Inverse-CDF draw; the result always lies in [a, b].
double sample_trunc(const TruncSpec& spec, Rng& rng);

enum class GenMode { means, sampling, coupling };

struct Variant {
    GenMode mode = GenMode::sampling;
    PoolLevel level = PoolLevel::region;
};

std::string variant_name(Variant v);
Variant variant_from_string(const std::string& s);

struct Resolved {
    MomentCell cell;
    PoolLevel level = PoolLevel::global;
    bool deterministic = false; // degenerate global: use the mean verbatim
};

// Hierarchical fallback: starting at `start`, a level is accepted when its
// count reaches n_min and its variance is positive; otherwise the next
// coarser level is consulted. The global level always terminates the
// cascade; a degenerate global cell resolves to a deterministic mean.
Resolved resolve_level(const MomentTable& table, PoolLevel start,
                       std::size_t region_idx, Group g, OutcomeKind o,
                       int n_min);

struct EventModel {
    MomentTable table;
    int n_min = 8;
    Variant variant;
};

struct OutcomeTriple {
    double dwell = 0.0;
    double shots = 0.0;
    double victims = 0.0;
};

// Generates one visit outcome for the region. time_U caps the dwell draw
// (pass kInf for no cap); when the resolved mean already exceeds the cap
// the draw falls back to uncapped, which leaves the final event of a
// budget-limited episode untruncated. Victims are capped by the observed
// max at their resolved level.
OutcomeTriple gen_outcome(const EventModel& model, const RegionGraph& graph,
                          std::size_t region_idx, double time_U, Rng& rng);

std::string event_model_to_json(const EventModel& model,
                                const RegionGraph& graph);
EventModel event_model_from_json(const std::string& text,
                                 const RegionGraph& graph);

// Per-region fit diagnostics: one row per (region, outcome) with the
// resolved level and the moment-match clamp flag.
std::string event_model_diag_csv(const EventModel& model,
                                 const RegionGraph& graph);

} // namespace desim
