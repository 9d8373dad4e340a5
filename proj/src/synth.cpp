#include "desim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "desim/common.hpp"
#include "desim/event_model.hpp"
#include "desim/responder.hpp"

namespace desim {

std::string synth_school_json() {
    // Two floors joined by two stairwells; max out-degree 5.
    return R"({
  "regions": [
    {"id": 0,  "name": "main_entrance",  "group": "entrance",  "floor": 0, "centroid": [10, 6],  "area": 20},
    {"id": 1,  "name": "side_entrance",  "group": "entrance",  "floor": 0, "centroid": [16, 6],  "area": 20},
    {"id": 2,  "name": "yard",           "group": "outdoor",   "floor": 0, "centroid": [10, 2],  "area": 100},
    {"id": 3,  "name": "room_101",       "group": "classroom", "floor": 0, "centroid": [3, 14],  "area": 48},
    {"id": 4,  "name": "room_102",       "group": "classroom", "floor": 0, "centroid": [7, 14],  "area": 48},
    {"id": 5,  "name": "room_103",       "group": "classroom", "floor": 0, "centroid": [12, 14], "area": 48},
    {"id": 6,  "name": "room_104",       "group": "classroom", "floor": 0, "centroid": [15, 14], "area": 48},
    {"id": 7,  "name": "hall_w0",        "group": "hallway",   "floor": 0, "centroid": [5, 10],  "area": 30},
    {"id": 8,  "name": "hall_c0",        "group": "hallway",   "floor": 0, "centroid": [10, 10], "area": 30},
    {"id": 9,  "name": "hall_e0",        "group": "hallway",   "floor": 0, "centroid": [15, 10], "area": 30},
    {"id": 10, "name": "cafeteria",      "group": "common",    "floor": 0, "centroid": [2, 6],   "area": 80},
    {"id": 11, "name": "stair_a0",       "group": "stairwell", "floor": 0, "centroid": [1, 10],  "area": 12},
    {"id": 12, "name": "stair_b0",       "group": "stairwell", "floor": 0, "centroid": [18, 10], "area": 12},
    {"id": 13, "name": "room_201",       "group": "classroom", "floor": 1, "centroid": [3, 14],  "area": 48},
    {"id": 14, "name": "room_202",       "group": "classroom", "floor": 1, "centroid": [7, 14],  "area": 48},
    {"id": 15, "name": "room_203",       "group": "classroom", "floor": 1, "centroid": [12, 14], "area": 48},
    {"id": 16, "name": "room_204",       "group": "classroom", "floor": 1, "centroid": [15, 14], "area": 48},
    {"id": 17, "name": "hall_w1",        "group": "hallway",   "floor": 1, "centroid": [5, 10],  "area": 30},
    {"id": 18, "name": "hall_c1",        "group": "hallway",   "floor": 1, "centroid": [10, 10], "area": 30},
    {"id": 19, "name": "hall_e1",        "group": "hallway",   "floor": 1, "centroid": [15, 10], "area": 30},
    {"id": 20, "name": "library",        "group": "common",    "floor": 1, "centroid": [2, 6],   "area": 80},
    {"id": 21, "name": "stair_a1",       "group": "stairwell", "floor": 1, "centroid": [1, 10],  "area": 12},
    {"id": 22, "name": "stair_b1",       "group": "stairwell", "floor": 1, "centroid": [18, 10], "area": 12},
    {"id": 23, "name": "lab_205",        "group": "classroom", "floor": 1, "centroid": [10, 4],  "area": 48}
  ],
  "edges": [
    [0, 2], [0, 8], [1, 9],
    [3, 7], [4, 8], [5, 8], [6, 9],
    [7, 8], [8, 9],
    [7, 10], [7, 11], [9, 12],
    [10, 11],
    [13, 17], [14, 18], [15, 18], [16, 19],
    [17, 18], [18, 19],
    [17, 20], [17, 21], [19, 22],
    [20, 21],
    [18, 23],
    [11, 21], [12, 22]
  ]
}
)";
}

RegionGraph synth_school() { return RegionGraph::from_json(synth_school_json()); }

namespace {

struct GroupScale {
    double time, shots, victims;
};

GroupScale scale_for(Group g) {
    switch (g) {
    case Group::classroom: return {12.0, 3.5, 1.6};
    case Group::hallway: return {5.0, 1.2, 0.4};
    case Group::common: return {10.0, 2.5, 1.0};
    case Group::stairwell: return {4.0, 0.6, 0.2};
    case Group::entrance: return {6.0, 1.5, 0.5};
    case Group::outdoor: return {7.0, 1.0, 0.3};
    }
    return {8.0, 2.0, 1.0};
}

// Deterministic per-region jitter in [0.85, 1.15].
double jitter(int id, int salt) {
    return 0.85 + 0.3 * double((id * 37 + salt * 101) % 100) / 99.0;
}

} // namespace

MomentTable synth_moments(const RegionGraph& graph, long long n_per_region) {
    MomentTable t;
    t.region.resize(graph.size());
    t.region_rate.resize(graph.size());

    // Pooled mixture accumulators per group and globally: the group and
    // global cells hold the exact moments of the region mixture so the
    // fallback cascade sees consistent numbers.
    struct Mix {
        long long n = 0;
        double sum = 0, sumsq = 0, mx = 0;
        void add(long long k, double m, double v, double cap) {
            n += k;
            sum += double(k) * m;
            sumsq += double(k) * (v + m * m);
            mx = std::max(mx, cap);
        }
        MomentCell cell() const {
            MomentCell c;
            c.n = n;
            if (n > 0) {
                c.mean = sum / double(n);
                c.var = std::max(0.0, sumsq / double(n) - c.mean * c.mean);
                c.max = mx;
            }
            return c;
        }
    };
    std::array<std::array<Mix, kOutcomeCount>, kGroupCount> gmix{};
    std::array<Mix, kOutcomeCount> allmix{};
    std::array<double, kGroupCount> g_time{}, g_shots{}, g_vict{};
    double a_time = 0, a_shots = 0, a_vict = 0;

    for (std::size_t i = 0; i < graph.size(); ++i) {
        const Region& r = graph.region_at(i);
        const GroupScale s = scale_for(r.group);
        const double m_t = s.time * jitter(r.id, 1);
        const double m_s = s.shots * jitter(r.id, 2);
        const double m_v = s.victims * jitter(r.id, 3);
        // Variance at 0.15 m^2 sits well inside the h^2/3 symmetric
        // truncation ceiling for every bound configuration used here.
        const double c = 0.15;
        auto mk = [&](double m, double cap) {
            MomentCell cell;
            cell.n = n_per_region;
            cell.mean = m;
            cell.var = c * m * m;
            cell.max = cap;
            return cell;
        };
        t.region[i][0] = mk(m_t, m_t * 3.0);
        t.region[i][1] = mk(m_s, m_s * 3.0);
        t.region[i][2] = mk(m_v, m_v * 2.0);

        const int g = static_cast<int>(r.group);
        for (int o = 0; o < kOutcomeCount; ++o) {
            const MomentCell& cell = t.region[i][o];
            gmix[g][o].add(cell.n, cell.mean, cell.var, cell.max);
            allmix[o].add(cell.n, cell.mean, cell.var, cell.max);
        }
        t.region_rate[i].shot_rate = m_s / m_t;
        t.region_rate[i].victim_rate = m_v / m_t;
        g_time[g] += double(n_per_region) * m_t;
        g_shots[g] += double(n_per_region) * m_s;
        g_vict[g] += double(n_per_region) * m_v;
        a_time += double(n_per_region) * m_t;
        a_shots += double(n_per_region) * m_s;
        a_vict += double(n_per_region) * m_v;
    }

    for (int g = 0; g < kGroupCount; ++g) {
        for (int o = 0; o < kOutcomeCount; ++o)
            t.group[g][o] = gmix[g][o].cell();
        if (g_time[g] > 0) {
            t.group_rate[g].shot_rate = g_shots[g] / g_time[g];
            t.group_rate[g].victim_rate = g_vict[g] / g_time[g];
        }
    }
    for (int o = 0; o < kOutcomeCount; ++o) t.global[o] = allmix[o].cell();
    t.global_rate.shot_rate = a_shots / a_time;
    t.global_rate.victim_rate = a_vict / a_time;
    return t;
}

PlantedWeights default_planted_weights() {
    return {{"betweenness", 6.0},
            {"direction_similarity", 1.0},
            {"recency", -1.0},
            {"is_entrance", -0.5},
            {"is_outside", -1.5},
            {"has_target", 0.5}};
}

namespace {

std::vector<double> planted_logits(const TransitionContext& ctx,
                                   const RegionGraph& graph,
                                   const std::vector<const FeatureDef*>& defs,
                                   const std::vector<double>& ws,
                                   double temperature) {
    const auto& nbrs = graph.neighbors(ctx.current);
    std::vector<double> logits(nbrs.size(), 0.0);
    for (std::size_t c = 0; c < nbrs.size(); ++c) {
        const std::size_t idx = graph.index_of(nbrs[c]);
        double z = 0.0;
        for (std::size_t f = 0; f < defs.size(); ++f)
            z += ws[f] * defs[f]->fn(ctx, idx, graph);
        logits[c] = z / temperature;
    }
    return logits;
}

int softmax_draw(const std::vector<int>& nbrs, std::vector<double> logits,
                 Rng& rng) {
    const double mx = *std::max_element(logits.begin(), logits.end());
    std::vector<double> w(logits.size());
    for (std::size_t i = 0; i < logits.size(); ++i)
        w[i] = std::exp(logits[i] - mx);
    return nbrs[rng.weighted_index(w)];
}

int argmax_id(const std::vector<int>& nbrs, const std::vector<double>& logits) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < logits.size(); ++i)
        if (logits[i] > logits[best]) best = i;
    return nbrs[best];
}

struct PlantedDefs {
    std::vector<const FeatureDef*> defs;
    std::vector<double> ws;
};

PlantedDefs bind_weights(const FeatureRegistry& registry,
                         const PlantedWeights& pw) {
    PlantedDefs out;
    for (const auto& [name, w] : pw) {
        out.defs.push_back(&registry.get(name));
        out.ws.push_back(w);
    }
    return out;
}

} // namespace

TransitionModel planted_transition(const FeatureRegistry& registry,
                                   PlantedWeights weights,
                                   double temperature) {
    if (temperature <= 0.0) fail("planted transition: temperature must be > 0");
    auto bound = std::make_shared<PlantedDefs>(bind_weights(registry, weights));
    auto predict = [bound, temperature](const TransitionContext& ctx,
                                        const RegionGraph& graph, Rng&) {
        return argmax_id(graph.neighbors(ctx.current),
                         planted_logits(ctx, graph, bound->defs, bound->ws,
                                        temperature));
    };
    auto sample = [bound, temperature](const TransitionContext& ctx,
                                       const RegionGraph& graph, Rng& rng) {
        return softmax_draw(graph.neighbors(ctx.current),
                            planted_logits(ctx, graph, bound->defs, bound->ws,
                                           temperature),
                            rng);
    };
    return TransitionModel::make_custom("planted", std::move(predict),
                                        std::move(sample));
}

Corpus synth_corpus(const RegionGraph& graph, const MomentTable& table,
                    const FeatureRegistry& registry, const PlantedWeights& pw,
                    const SynthConfig& cfg) {
    if (cfg.episodes < 1) fail("synth: need at least one episode");
    const PlantedDefs bound = bind_weights(registry, pw);
    EventModel em;
    em.table = table;
    em.n_min = 8;
    em.variant = Variant{GenMode::sampling, PoolLevel::region};

    std::size_t start = 0;
    {
        int best_id = -1;
        for (std::size_t i = 0; i < graph.size(); ++i) {
            const Region& r = graph.region_at(i);
            if (r.is_entrance && (best_id < 0 || r.id < best_id)) {
                best_id = r.id;
                start = i;
            }
        }
        if (best_id < 0) fail("synth: layout has no entrance");
    }

    Corpus corpus;
    corpus.provenance = Provenance::synthetic;
    corpus.condition = Condition::baseline;
    for (int e = 0; e < cfg.episodes; ++e) {
        Rng move_rng(derive_seed(cfg.seed, "move", e));
        Rng out_rng(derive_seed(cfg.seed, "outcome", e));
        Episode ep;
        ep.id = e;

        TransitionContext ctx;
        ctx.current = graph.region_at(start).id;
        ctx.last_visit_s.assign(graph.size(), -1.0);
        double clock = 0.0;
        int seq = 0;
        while (true) {
            const std::size_t cur = graph.index_of(ctx.current);
            const double remaining = cfg.t_max - clock;
            const OutcomeTriple out =
                gen_outcome(em, graph, cur, remaining, out_rng);

            VisitEvent v;
            v.episode_id = e;
            v.seq = seq++;
            v.region_id = ctx.current;
            v.dwell_s = out.dwell;
            v.shots = out.shots;
            v.victims = out.victims;
            ep.visits.push_back(v);
            clock += out.dwell;
            if (clock >= cfg.t_max) break;

            // Decision-time state matches the replay bookkeeping: elapsed
            // includes the current dwell, last-visit marks lag one step.
            ctx.elapsed_s = clock;
            ctx.visits_so_far = seq;
            const int next =
                softmax_draw(graph.neighbors(ctx.current),
                             planted_logits(ctx, graph, bound.defs, bound.ws,
                                            cfg.temperature),
                             move_rng);
            ctx.last_visit_s[cur] = clock;
            ctx.previous = ctx.current;
            ctx.current = next;
        }
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

double planted_self_accuracy(const Corpus& corpus, const RegionGraph& graph,
                             const FeatureRegistry& registry,
                             const PlantedWeights& pw) {
    const PlantedDefs bound = bind_weights(registry, pw);
    long long hits = 0, total = 0;
    for (const Episode& ep : corpus.episodes) {
        if (ep.visits.size() < 2) continue;
        TransitionContext ctx;
        ctx.last_visit_s.assign(graph.size(), -1.0);
        double clock = 0.0;
        for (std::size_t i = 0; i + 1 < ep.visits.size(); ++i) {
            const VisitEvent& v = ep.visits[i];
            clock += v.has_dwell() ? v.dwell_s : 30.0;
            ctx.current = v.region_id;
            ctx.previous = i > 0 ? ep.visits[i - 1].region_id : -1;
            ctx.elapsed_s = clock;
            ctx.visits_so_far = static_cast<int>(i + 1);
            const int pred =
                argmax_id(graph.neighbors(ctx.current),
                          planted_logits(ctx, graph, bound.defs, bound.ws,
                                         1.0));
            hits += pred == ep.visits[i + 1].region_id ? 1 : 0;
            ++total;
            ctx.last_visit_s[graph.index_of(v.region_id)] = clock;
        }
    }
    if (total == 0) fail("self-accuracy: no transitions");
    return double(hits) / double(total);
}

namespace {

double resolved_mean_at(const MomentTable& t, const RegionGraph& g,
                        std::size_t idx, OutcomeKind o) {
    return resolve_level(t, PoolLevel::region, idx, g.region_at(idx).group, o,
                         8)
        .cell.mean;
}

} // namespace

Corpus planted_effect_corpus(const RegionGraph& graph, const MomentTable& base,
                             double k_time, double k_shots, double k_victims,
                             int visits_per_region, double noise_sd,
                             double offset, std::uint64_t seed) {
    if (visits_per_region < 1) fail("effect corpus: visits_per_region < 1");
    Rng rng(seed);
    Corpus corpus;
    corpus.provenance = Provenance::synthetic;
    corpus.condition = Condition::robot_present;
    // One synthetic episode per region keeps the corpus shape simple; the
    // slope fit never looks across visit boundaries.
    for (std::size_t i = 0; i < graph.size(); ++i) {
        Episode ep;
        ep.id = static_cast<long long>(i);
        const double m_t = resolved_mean_at(base, graph, i, OutcomeKind::time);
        const double m_s = resolved_mean_at(base, graph, i, OutcomeKind::shots);
        const double m_v =
            resolved_mean_at(base, graph, i, OutcomeKind::victims);
        for (int v = 0; v < visits_per_region; ++v) {
            const double R = rng.uniform(0.0, 3.0);
            VisitEvent ev;
            ev.episode_id = ep.id;
            ev.seq = v;
            ev.region_id = graph.region_at(i).id;
            ev.R = R;
            ev.dwell_s = m_t + offset + k_time * R + rng.normal(0, noise_sd);
            ev.shots = m_s + offset + k_shots * R + rng.normal(0, noise_sd);
            ev.victims =
                m_v + offset + k_victims * R + rng.normal(0, noise_sd);
            ep.visits.push_back(ev);
        }
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

Corpus planted_lambda_corpus(const RegionGraph& graph, const MomentTable& base,
                             double lambda, double k_shots, double k_victims,
                             double offset, int episodes, double noise_sd,
                             std::uint64_t seed) {
    if (episodes < 2) fail("lambda corpus: need at least two episodes");
    Corpus corpus;
    corpus.provenance = Provenance::synthetic;
    corpus.condition = Condition::robot_present;
    for (int e = 0; e < episodes; ++e) {
        Rng rng(derive_seed(seed, "episode", e));
        Episode ep;
        ep.id = e;

        // Uniform random walk with deterministic baseline dwell.
        std::size_t cur = rng.uniform_int(graph.size());
        double clock = 0.0;
        const int length = 25 + static_cast<int>(rng.uniform_int(10));
        std::vector<std::size_t> path;
        for (int s = 0; s < length; ++s) {
            path.push_back(cur);
            VisitEvent v;
            v.episode_id = e;
            v.seq = s;
            v.region_id = graph.region_at(cur).id;
            v.dwell_s = resolved_mean_at(base, graph, cur, OutcomeKind::time);
            ep.visits.push_back(v);
            clock += v.dwell_s;
            const auto& outs = graph.out_indices(cur);
            if (outs.empty()) break;
            cur = outs[rng.uniform_int(outs.size())];
        }

        // Smoke deposits scattered over the first 80% of the episode.
        const int deposits = 6 + static_cast<int>(rng.uniform_int(5));
        for (int d = 0; d < deposits; ++d) {
            SmokeEvent s;
            s.t = rng.uniform(0.0, clock * 0.8);
            s.region_id =
                graph.region_at(rng.uniform_int(graph.size())).id;
            s.amount = 1.0;
            ep.smoke.push_back(s);
        }

        const std::vector<double> R = recompute_influence(ep, graph, lambda);
        for (std::size_t i = 0; i < ep.visits.size(); ++i) {
            VisitEvent& v = ep.visits[i];
            const std::size_t idx = graph.index_of(v.region_id);
            v.R = R[i];
            v.shots = resolved_mean_at(base, graph, idx, OutcomeKind::shots) +
                      offset + k_shots * R[i] + rng.normal(0, noise_sd);
            v.victims =
                resolved_mean_at(base, graph, idx, OutcomeKind::victims) +
                offset + k_victims * R[i] + rng.normal(0, noise_sd);
        }
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

} // namespace desim
