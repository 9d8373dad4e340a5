#pragma once

#include <string>
#include <vector>

#include "desim/records.hpp"
#include "desim/region_graph.hpp"
#include "desim/rng.hpp"

namespace desim {

// Parses a 2 Hz trace CSV (columns: episode_id,tick,region_id,shots_cum,
// victims_cum and optionally robot1_region,robot2_region,smoke_region,
// smoke_intensity). Records are grouped by episode and sorted by tick;
// validation failures carry the 1-based row number.
std::vector<TickRecord> parse_trace(const std::string& text,
                                    const RegionGraph& graph);
std::vector<TickRecord> parse_trace_file(const std::string& path,
                                         const RegionGraph& graph);

// Collapses consecutive same-region ticks into visit events. Dwell is the
// run length at 0.5 s per tick; shots/victims are the cumulative deltas
// across the run. The final run of an episode closes at its last tick.
Corpus extract_visits(const std::vector<TickRecord>& ticks);

// Renders a corpus back to tick records. Dwell is rounded to the nearest
// tick (minimum one); outcome deltas land on the final tick of each run.
std::vector<TickRecord> to_ticks(const Corpus& corpus);

std::string trace_to_csv(const std::vector<TickRecord>& ticks);

// Visit-level CSV: episode_id,seq,region_id,dwell_s,shots,victims.
// dwell_s may be the literal "null" for sequences with unknown timing.
Corpus parse_visits(const std::string& text, const RegionGraph& graph);
Corpus parse_visits_file(const std::string& path, const RegionGraph& graph);
std::string visits_to_csv(const Corpus& corpus);

// Episode-level k-fold partition: every episode lands in exactly one test
// fold, fold sizes within one episode of each other, order seeded.
struct FoldPair {
    Corpus train;
    Corpus test;
};
std::vector<FoldPair> kfold_split(const Corpus& corpus, std::size_t k,
                                  std::uint64_t seed);

} // namespace desim
