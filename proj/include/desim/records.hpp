#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace desim {

// One 2 Hz log row. Counters are cumulative within an episode. Robot and
// smoke columns are optional; -1 region means absent.
struct TickRecord {
    long long episode_id = 0;
    long long tick = 0;
    int region_id = 0;
    long long shots_cum = 0;
    long long victims_cum = 0;
    int robot1_region = -1;
    int robot2_region = -1;
    int smoke_region = -1;
    double smoke_intensity = 0.0;
};

inline constexpr double kTickSeconds = 0.5;

// One contiguous stay in a region. dwell_s is NaN for externally supplied
// sequences whose timing is unknown; such visits feed transition evaluation
// but are skipped by outcome fitting.
struct VisitEvent {
    long long episode_id = 0;
    int seq = 0;
    int region_id = 0;
    double dwell_s = 0.0;
    double shots = 0.0;
    double victims = 0.0;
    double R = 0.0;

    bool has_dwell() const { return !std::isnan(dwell_s); }
};

// Smoke deposition: `amount` added to `region_id` at episode time t.
struct SmokeEvent {
    double t = 0.0;
    int region_id = 0;
    double amount = 0.0;
};

struct Episode {
    long long id = 0;
    std::vector<VisitEvent> visits;
    std::vector<SmokeEvent> smoke;
};

enum class Provenance { ingested, synthetic };
enum class Condition { baseline, robot_present };

struct Corpus {
    std::vector<Episode> episodes;
    Provenance provenance = Provenance::ingested;
    Condition condition = Condition::baseline;

    std::size_t visit_count() const {
        std::size_t n = 0;
        for (const auto& ep : episodes) n += ep.visits.size();
        return n;
    }
};

} // namespace desim
