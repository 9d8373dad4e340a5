#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "desim/event_model.hpp"
#include "desim/responder.hpp"
#include "desim/selection.hpp"

namespace desim {

enum class Termination { time_budget, visit_count };

struct SimConfig {
    double t_max = 300.0;
    // -1 picks the lowest-id entrance.
    int start_region_id = -1;
    Termination termination = Termination::time_budget;
    int visit_target = 0; // visit_count mode: exact number of events
    int robot_count = 2;
    double robot_speed = 0.5; // regions per second of event time
    // Explicit robot spawn ids; empty = entrances round-robin, offset by
    // one so robot spawns differ from the default adversary start.
    std::vector<int> robot_start_ids;
    bool multi_floor = true; // false pins each robot to its spawn floor
    bool greedy_transition = false;
    double smoke_decay_rate = 0.0; // 0 disables the decay hook
};

struct EngineModels {
    const TransitionModel* transition = nullptr;
    const EventModel* events = nullptr;
    const EffectModel* effects = nullptr; // optional
};

struct RobotState {
    std::size_t region = 0;
    std::size_t dest = 0;    // == region when idle
    double progress = 0.0;   // fraction of the committed hop done
    int home_floor = 0;
};

// Mutable rollout state, visible to robot policies at event boundaries.
struct World {
    const RegionGraph* graph = nullptr;
    const SimConfig* cfg = nullptr;
    TransitionContext ctx; // adversary; region ids
    std::size_t adv = 0;   // adversary region index
    std::vector<RobotState> robots;
    SmokeField smoke;
    double clock = 0.0;
    std::vector<double> victim_budget; // region index -> remaining
    std::vector<double> victim_cap;    // initial budget (resolved max)
    int visits = 0;

    bool robot_idle(std::size_t i) const {
        return robots[i].dest == robots[i].region;
    }
    bool all_robots_idle() const;
    // Valid destinations for one robot: its current region first (stay),
    // then out-neighbors ascending, floor-filtered in single-floor mode.
    std::vector<std::size_t> robot_moves(std::size_t i) const;
    // Commits a next-hop; rejects non-adjacent or floor-violating moves.
    void set_robot_dest(std::size_t i, std::size_t dest_idx);
    // Hop distance robot -> adversary on the full graph, +inf unreachable.
    double robot_distance(std::size_t i) const;
};

// Decides robot next-hops at event boundaries. Stateful per episode.
class RobotPolicy {
public:
    virtual ~RobotPolicy() = default;
    virtual void episode_start(World&, Rng&) {}
    virtual void decide(World&, Rng&) = 0;
    virtual void episode_end(World&, Rng&) {}
};

struct RobotMove {
    double t = 0.0;
    int robot = 0;
    int region_id = 0;
};

struct RolloutSummary {
    int nodes = 0;
    double total_time = 0.0;
    double shots = 0.0;
    double victims = 0.0;
};

struct RolloutLog {
    long long episode_id = 0;
    std::vector<VisitEvent> events;
    std::vector<RobotMove> robot_moves;
    std::vector<SmokeEvent> smoke;
    std::string termination;
    RolloutSummary summary;
};

// One full episode. Random streams for transitions, outcomes, and the
// policy are derived independently from `seed`, so adding robots never
// perturbs the outcome draws.
RolloutLog run_episode(const RegionGraph& graph, const EngineModels& models,
                       const SimConfig& cfg, RobotPolicy* policy,
                       std::uint64_t seed, long long episode_id = 0);

using PolicyFactory = std::function<std::unique_ptr<RobotPolicy>()>;

// Episode i runs on a stream derived from (base_seed, i); results are
// identical for any worker count.
std::vector<RolloutLog> batch_rollout(const RegionGraph& graph,
                                      const EngineModels& models,
                                      const SimConfig& cfg,
                                      const PolicyFactory& make_policy,
                                      std::size_t n, std::uint64_t base_seed,
                                      int workers = 1);

Corpus corpus_from_logs(const std::vector<RolloutLog>& logs,
                        Condition condition);

// episode,seq,region,dwell_s,shots,victims,R,clock_s
std::string rollout_csv(const std::vector<RolloutLog>& logs);
std::string rollout_summary_json(const RolloutLog& log);

} // namespace desim
