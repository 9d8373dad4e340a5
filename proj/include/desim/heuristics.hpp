#pragma once

#include <string>

#include "desim/features.hpp"
#include "desim/region_graph.hpp"
#include "desim/rng.hpp"

namespace desim {

// Movement baselines; ties always break toward the lowest region id.
//   RA  uniform over neighbors
//   CT  toward the nearest region that still holds targets
//   CV  continue the previous heading (cosine argmax)
//   CE  toward the nearest entrance
//   FE  away from the nearest entrance
//   LA  toward the largest candidate area
enum class Heuristic { RA, CT, CV, CE, FE, LA };
inline constexpr int kHeuristicCount = 6;

const char* heuristic_name(Heuristic h);
Heuristic heuristic_from_string(const std::string& s);

// Next region id under a heuristic. CT falls back to RA when no region has
// targets; CV falls back to RA before the first move; CE/FE fall back to
// RA when the layout has no entrance.
int heuristic_next(Heuristic kind, const TransitionContext& ctx,
                   const RegionGraph& graph, Rng& rng);

// Minimum hop distance from a region to any region satisfying the flag
// vector; +inf when none is reachable or the set is empty.
double dist_to_nearest(const RegionGraph& graph, std::size_t from,
                       const std::vector<char>& flags);

} // namespace desim
