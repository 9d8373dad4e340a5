#pragma once

#include <array>
#include <string>
#include <vector>

#include "desim/records.hpp"
#include "desim/region_graph.hpp"

namespace desim {

enum class OutcomeKind { time, shots, victims };
inline constexpr int kOutcomeCount = 3;
const char* outcome_name(OutcomeKind o);
OutcomeKind outcome_from_string(const std::string& s);

enum class PoolLevel { region, group, global };
const char* level_name(PoolLevel l);
PoolLevel level_from_string(const std::string& s);

struct MomentCell {
    long long n = 0;
    double mean = 0.0;
    double var = 0.0; // sample variance, n-1 denominator; 0 when n < 2
    double max = 0.0;
};

// Rates are total-ratio (sum of outcome over sum of dwell), which avoids
// small-dwell blowups that a mean of per-visit ratios would produce.
struct RateCell {
    double shot_rate = 0.0;
    double victim_rate = 0.0;
};

// Pooled outcome moments at region, group, and global granularity.
// Indexed by region index within the graph the table was built against.
struct MomentTable {
    std::vector<std::array<MomentCell, kOutcomeCount>> region;
    std::array<std::array<MomentCell, kOutcomeCount>, kGroupCount> group{};
    std::array<MomentCell, kOutcomeCount> global{};
    std::vector<RateCell> region_rate;
    std::array<RateCell, kGroupCount> group_rate{};
    RateCell global_rate;

    const MomentCell& cell(PoolLevel level, std::size_t region_idx,
                           Group g, OutcomeKind o) const;
    const RateCell& rate(PoolLevel level, std::size_t region_idx, Group g) const;
};

MomentTable pool_moments(const Corpus& corpus, const RegionGraph& graph);

std::string moment_table_to_json(const MomentTable& table,
                                 const RegionGraph& graph);
MomentTable moment_table_from_json(const std::string& text,
                                   const RegionGraph& graph);

} // namespace desim
