#include "desim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "desim/common.hpp"
#include "desim/csv.hpp"
#include "nlohmann/json.hpp"

namespace desim {

bool World::all_robots_idle() const {
    for (std::size_t i = 0; i < robots.size(); ++i)
        if (!robot_idle(i)) return false;
    return true;
}

std::vector<std::size_t> World::robot_moves(std::size_t i) const {
    const RobotState& r = robots[i];
    std::vector<std::size_t> out;
    out.push_back(r.region);
    for (std::size_t nb : graph->out_indices(r.region)) {
        if (!cfg->multi_floor && graph->region_at(nb).floor != r.home_floor)
            continue;
        out.push_back(nb);
    }
    return out;
}

void World::set_robot_dest(std::size_t i, std::size_t dest_idx) {
    const auto moves = robot_moves(i);
    if (std::find(moves.begin(), moves.end(), dest_idx) == moves.end())
        fail("robot ", i, ": invalid destination ",
             graph->region_at(dest_idx).id);
    robots[i].dest = dest_idx;
    if (dest_idx == robots[i].region) robots[i].progress = 0.0;
}

double World::robot_distance(std::size_t i) const {
    return graph->hop_dist(robots[i].region, adv);
}

namespace {

std::size_t lowest_id_entrance(const RegionGraph& graph) {
    int best_id = -1;
    std::size_t best = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const Region& r = graph.region_at(i);
        if (!r.is_entrance) continue;
        if (best_id < 0 || r.id < best_id) {
            best_id = r.id;
            best = i;
        }
    }
    if (best_id < 0) fail("layout has no entrance region");
    return best;
}

std::vector<std::size_t> entrance_indices(const RegionGraph& graph) {
    std::vector<std::pair<int, std::size_t>> es;
    for (std::size_t i = 0; i < graph.size(); ++i)
        if (graph.region_at(i).is_entrance)
            es.emplace_back(graph.region_at(i).id, i);
    std::sort(es.begin(), es.end());
    std::vector<std::size_t> out;
    for (const auto& e : es) out.push_back(e.second);
    return out;
}

} // namespace

RolloutLog run_episode(const RegionGraph& graph, const EngineModels& models,
                       const SimConfig& cfg, RobotPolicy* policy,
                       std::uint64_t seed, long long episode_id) {
    if (!models.transition || !models.events) fail("engine: models missing");
    if (cfg.t_max <= 0) fail("engine: T_max must be positive");
    if (cfg.robot_speed <= 0) fail("engine: robot speed must be positive");
    if (cfg.termination == Termination::visit_count && cfg.visit_target < 1)
        fail("engine: visit-count mode needs a positive target");
    if (cfg.robot_count > 0 && !policy)
        fail("engine: robots configured without a policy");

    Rng t_rng(derive_seed(seed, "transition"));
    Rng e_rng(derive_seed(seed, "events"));
    Rng p_rng(derive_seed(seed, "policy"));

    World w;
    w.graph = &graph;
    w.cfg = &cfg;
    w.adv = cfg.start_region_id >= 0
                ? graph.index_of(cfg.start_region_id)
                : lowest_id_entrance(graph);
    w.ctx.current = graph.region_at(w.adv).id;
    w.ctx.previous = -1;
    w.ctx.last_visit_s.assign(graph.size(), -1.0);
    w.ctx.has_target.assign(graph.size(), 0);
    w.smoke = SmokeField(graph.size());

    w.victim_cap.resize(graph.size());
    w.victim_budget.resize(graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const double cap =
            resolve_level(models.events->table, PoolLevel::region, i,
                          graph.region_at(i).group, OutcomeKind::victims,
                          models.events->n_min)
                .cell.max;
        w.victim_cap[i] = cap;
        w.victim_budget[i] = cap;
        w.ctx.has_target[i] = cap > 0 ? 1 : 0;
    }

    RolloutLog log;
    log.episode_id = episode_id;

    if (cfg.robot_count > 0) {
        std::vector<std::size_t> spawns;
        if (!cfg.robot_start_ids.empty()) {
            if (static_cast<int>(cfg.robot_start_ids.size()) !=
                cfg.robot_count)
                fail("engine: robot_start_ids count mismatch");
            for (int id : cfg.robot_start_ids)
                spawns.push_back(graph.index_of(id));
        } else {
            const auto entrances = entrance_indices(graph);
            if (entrances.empty())
                fail("engine: no entrances to spawn robots at");
            for (int i = 0; i < cfg.robot_count; ++i)
                spawns.push_back(entrances[(i + 1) % entrances.size()]);
        }
        for (int i = 0; i < cfg.robot_count; ++i) {
            RobotState r;
            r.region = spawns[i];
            r.dest = spawns[i];
            r.home_floor = graph.region_at(spawns[i]).floor;
            w.robots.push_back(r);
            w.smoke.deposit(spawns[i], graph.region_at(spawns[i]).id, 1.0,
                            0.0);
            log.robot_moves.push_back(
                RobotMove{0.0, i, graph.region_at(spawns[i]).id});
        }
        policy->episode_start(w, p_rng);
        policy->decide(w, p_rng);
    }

    constexpr std::size_t kMaxEvents = 1000000;
    constexpr double kMinDwell = 1e-9;
    std::string termination;
    while (true) {
        const std::size_t cur = w.adv;
        const double remaining = cfg.t_max - w.clock;
        const double time_U =
            cfg.termination == Termination::time_budget ? remaining
                                                        : cfg.t_max;
        OutcomeTriple out =
            gen_outcome(*models.events, graph, cur, time_U, e_rng);

        double R = 0.0;
        if (models.effects) {
            R = influence_at(w.smoke, graph, models.effects->lambda, cur);
            out = modulate(out, R, *models.effects, cur, w.victim_cap[cur]);
        }

        const double victims = std::min(out.victims, w.victim_budget[cur]);
        w.victim_budget[cur] -= victims;
        if (w.victim_budget[cur] <= 1e-12) {
            w.victim_budget[cur] = 0.0;
            w.ctx.has_target[cur] = 0;
        }
        const double dwell = std::max(out.dwell, kMinDwell);

        VisitEvent ev;
        ev.episode_id = episode_id;
        ev.seq = static_cast<int>(log.events.size());
        ev.region_id = graph.region_at(cur).id;
        ev.dwell_s = dwell;
        ev.shots = out.shots;
        ev.victims = victims;
        ev.R = R;
        log.events.push_back(ev);

        w.clock += dwell;
        ++w.visits;

        if (cfg.smoke_decay_rate > 0)
            w.smoke.decay(dwell, cfg.smoke_decay_rate);
        for (std::size_t i = 0; i < w.robots.size(); ++i) {
            RobotState& r = w.robots[i];
            if (r.dest == r.region) continue;
            r.progress += cfg.robot_speed * dwell;
            if (r.progress >= 1.0) {
                r.region = r.dest;
                r.progress = 0.0;
                w.smoke.deposit(r.region, graph.region_at(r.region).id, 1.0,
                                w.clock);
                log.robot_moves.push_back(RobotMove{
                    w.clock, static_cast<int>(i),
                    graph.region_at(r.region).id});
            }
        }

        if (cfg.termination == Termination::time_budget &&
            w.clock >= cfg.t_max) {
            termination = "time-budget";
            break;
        }
        if (cfg.termination == Termination::visit_count &&
            static_cast<int>(log.events.size()) >= cfg.visit_target) {
            termination = "visit-count";
            break;
        }
        if (log.events.size() >= kMaxEvents) {
            termination = "event-cap";
            break;
        }

        if (policy) policy->decide(w, p_rng);

        // Decision-time state matches the replay bookkeeping: elapsed
        // includes the current dwell, last-visit marks lag one step.
        w.ctx.elapsed_s = w.clock;
        w.ctx.visits_so_far = w.visits;
        const int next_id = cfg.greedy_transition
                                ? models.transition->predict(w.ctx, graph,
                                                             t_rng)
                                : models.transition->sample(w.ctx, graph,
                                                            t_rng);
        w.ctx.last_visit_s[cur] = w.clock;
        w.ctx.previous = w.ctx.current;
        w.ctx.current = next_id;
        w.adv = graph.index_of(next_id);
    }

    if (policy) policy->episode_end(w, p_rng);

    log.smoke = w.smoke.history;
    log.termination = termination;
    log.summary.nodes = static_cast<int>(log.events.size());
    for (const VisitEvent& e : log.events) {
        log.summary.total_time += e.dwell_s;
        log.summary.shots += e.shots;
        log.summary.victims += e.victims;
    }
    return log;
}

std::vector<RolloutLog> batch_rollout(const RegionGraph& graph,
                                      const EngineModels& models,
                                      const SimConfig& cfg,
                                      const PolicyFactory& make_policy,
                                      std::size_t n, std::uint64_t base_seed,
                                      int workers) {
    if (n == 0) fail("batch rollout: need at least one episode");
    std::vector<RolloutLog> logs(n);
    const int nw = std::max(1, workers);

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            std::unique_ptr<RobotPolicy> policy;
            if (make_policy) policy = make_policy();
            logs[i] = run_episode(graph, models, cfg, policy.get(),
                                  derive_seed(base_seed, "episode", i),
                                  static_cast<long long>(i));
        }
    };

    if (nw == 1 || n < 2) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        const std::size_t chunk = 8;
        for (int t = 0; t < nw; ++t) {
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t lo =
                        next.fetch_add(chunk, std::memory_order_relaxed);
                    if (lo >= n) return;
                    run_range(lo, std::min(n, lo + chunk));
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return logs;
}

Corpus corpus_from_logs(const std::vector<RolloutLog>& logs,
                        Condition condition) {
    Corpus c;
    c.provenance = Provenance::synthetic;
    c.condition = condition;
    for (const RolloutLog& log : logs) {
        Episode ep;
        ep.id = log.episode_id;
        ep.visits = log.events;
        ep.smoke = log.smoke;
        c.episodes.push_back(std::move(ep));
    }
    return c;
}

std::string rollout_csv(const std::vector<RolloutLog>& logs) {
    std::ostringstream out;
    out << "episode,seq,region,dwell_s,shots,victims,R,clock_s\n";
    for (const RolloutLog& log : logs) {
        double clock = 0.0;
        for (const VisitEvent& e : log.events) {
            clock += e.dwell_s;
            out << log.episode_id << ',' << e.seq << ',' << e.region_id << ','
                << fmt_g(e.dwell_s, 12) << ',' << fmt_g(e.shots, 12) << ','
                << fmt_g(e.victims, 12) << ',' << fmt_g(e.R, 12) << ','
                << fmt_g(clock, 12) << '\n';
        }
    }
    return out.str();
}

std::string rollout_summary_json(const RolloutLog& log) {
    nlohmann::json j;
    j["episode"] = log.episode_id;
    j["termination"] = log.termination;
    j["nodes"] = log.summary.nodes;
    j["total_time_s"] = log.summary.total_time;
    j["shots"] = log.summary.shots;
    j["victims"] = log.summary.victims;
    return j.dump(2) + "\n";
}

} // namespace desim
