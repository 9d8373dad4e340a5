#include "desim/responder.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "desim/common.hpp"
#include "nlohmann/json.hpp"

namespace desim {

using nlohmann::json;

void SmokeField::deposit(std::size_t region_idx, int region_id, double amount,
                         double t) {
    if (region_idx >= intensity.size())
        fail("smoke deposit into unknown region index ", region_idx);
    intensity[region_idx] += amount;
    history.push_back(SmokeEvent{t, region_id, amount});
}

void SmokeField::decay(double dt, double rate) {
    if (rate <= 0.0 || dt <= 0.0) return;
    const double f = std::exp(-rate * dt);
    for (double& v : intensity) v *= f;
}

bool SmokeField::empty() const {
    for (double v : intensity)
        if (v != 0.0) return false;
    return true;
}

std::vector<double> default_lambda_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 40; ++i) g.push_back(0.05 * i);
    return g;
}

double influence_at(const SmokeField& smoke, const RegionGraph& graph,
                    double lambda, std::size_t region_idx) {
    double r = 0.0;
    for (std::size_t j = 0; j < smoke.intensity.size(); ++j) {
        const double w = smoke.intensity[j];
        if (w == 0.0) continue;
        const double d = graph.hop_dist(region_idx, j);
        if (!std::isfinite(d)) continue;
        r += w * std::exp(-lambda * d);
    }
    return r;
}

std::vector<double> influence(const SmokeField& smoke, const RegionGraph& graph,
                              double lambda) {
    std::vector<double> out(graph.size(), 0.0);
    if (smoke.empty()) return out;
    for (std::size_t i = 0; i < graph.size(); ++i)
        out[i] = influence_at(smoke, graph, lambda, i);
    return out;
}

OutcomeTriple modulate(const OutcomeTriple& x, double R,
                       const EffectModel& model, std::size_t region_idx,
                       double victims_cap) {
    OutcomeTriple y = x;
    y.dwell = x.dwell + R * model.k(region_idx, OutcomeKind::time);
    y.shots = x.shots + R * model.k(region_idx, OutcomeKind::shots);
    y.victims = x.victims + R * model.k(region_idx, OutcomeKind::victims);
    if (y.dwell < 0.0) y.dwell = 0.0;
    if (y.shots < 0.0) y.shots = 0.0;
    if (y.victims < 0.0) y.victims = 0.0;
    if (y.victims > victims_cap) y.victims = victims_cap;
    return y;
}

namespace {

struct SlopeAccum {
    long long n = 0;
    double sr = 0, srr = 0, se = 0, see = 0, sre = 0;
    void add(double r, double e) {
        ++n;
        sr += r;
        srr += r * r;
        se += e;
        see += e * e;
        sre += r * e;
    }
};

double resolved_mean(const MomentTable& t, const RegionGraph& g,
                     std::size_t idx, OutcomeKind o, int n_min) {
    return resolve_level(t, PoolLevel::region, idx, g.region_at(idx).group, o,
                         n_min)
        .cell.mean;
}

double resolved_max(const MomentTable& t, const RegionGraph& g,
                    std::size_t idx, int n_min) {
    return resolve_level(t, PoolLevel::region, idx, g.region_at(idx).group,
                         OutcomeKind::victims, n_min)
        .cell.max;
}

EffectModel fit_from(const MomentTable& baseline, const Corpus& corpus,
                     const RegionGraph& graph, double tau, int n_min,
                     const std::vector<std::vector<double>>* r_override) {
    std::vector<std::array<SlopeAccum, kOutcomeCount>> acc(graph.size());
    for (std::size_t e = 0; e < corpus.episodes.size(); ++e) {
        const Episode& ep = corpus.episodes[e];
        for (std::size_t v = 0; v < ep.visits.size(); ++v) {
            const VisitEvent& ev = ep.visits[v];
            const std::size_t idx = graph.index_of(ev.region_id);
            const double r = r_override ? (*r_override)[e][v] : ev.R;
            if (ev.has_dwell()) {
                const double m = resolved_mean(baseline, graph, idx,
                                               OutcomeKind::time, n_min);
                acc[idx][0].add(r, ev.dwell_s - m);
            }
            acc[idx][1].add(r, ev.shots - resolved_mean(baseline, graph, idx,
                                                        OutcomeKind::shots,
                                                        n_min));
            acc[idx][2].add(r, ev.victims -
                                   resolved_mean(baseline, graph, idx,
                                                 OutcomeKind::victims, n_min));
        }
    }

    EffectModel model;
    model.tau = tau;
    model.coeff.assign(graph.size(), {});
    for (std::size_t i = 0; i < graph.size(); ++i) {
        for (int o = 0; o < kOutcomeCount; ++o) {
            const SlopeAccum& a = acc[i][o];
            EffectCoeff& c = model.coeff[i][o];
            c.n = a.n;
            if (a.n < n_min) {
                c.suppressed = true;
                continue;
            }
            const double sxx = a.srr - a.sr * a.sr / double(a.n);
            const double syy = a.see - a.se * a.se / double(a.n);
            const double var_r = sxx / double(a.n - 1);
            const double var_e = syy / double(a.n - 1);
            if (var_r < kVarGuard || var_e < kVarGuard) {
                c.suppressed = true;
                continue;
            }
            const double sxy = a.sre - a.sr * a.se / double(a.n);
            const double slope = sxy / sxx;
            c.k = slope * double(a.n) / (double(a.n) + tau);
        }
    }
    return model;
}

} // namespace

EffectModel fit_coeffs(const MomentTable& baseline, const Corpus& robot_corpus,
                       const RegionGraph& graph, double tau, int n_min) {
    if (robot_corpus.episodes.empty()) fail("effect fit: empty corpus");
    return fit_from(baseline, robot_corpus, graph, tau, n_min, nullptr);
}

std::vector<double> recompute_influence(const Episode& ep,
                                        const RegionGraph& graph,
                                        double lambda) {
    std::vector<SmokeEvent> smoke = ep.smoke;
    std::stable_sort(smoke.begin(), smoke.end(),
                     [](const SmokeEvent& a, const SmokeEvent& b) {
                         return a.t < b.t;
                     });
    SmokeField field(graph.size());
    std::size_t next = 0;
    double clock = 0.0;
    std::vector<double> out;
    out.reserve(ep.visits.size());
    for (const VisitEvent& v : ep.visits) {
        while (next < smoke.size() && smoke[next].t <= clock) {
            field.intensity[graph.index_of(smoke[next].region_id)] +=
                smoke[next].amount;
            ++next;
        }
        out.push_back(
            influence_at(field, graph, lambda, graph.index_of(v.region_id)));
        clock += v.has_dwell() ? v.dwell_s : 0.0;
    }
    return out;
}

CalibrationResult calibrate_lambda(const MomentTable& baseline,
                                   const Corpus& robot_corpus,
                                   const RegionGraph& graph,
                                   const std::vector<double>& grid,
                                   double tau, int n_min) {
    if (grid.empty()) fail("lambda calibration: empty grid");
    if (robot_corpus.episodes.size() < 2)
        fail("lambda calibration needs at least two episodes, got ",
             robot_corpus.episodes.size());

    // Deterministic split: even episode positions fit, odd ones score.
    Corpus fit_half, held_half;
    for (std::size_t i = 0; i < robot_corpus.episodes.size(); ++i) {
        (i % 2 == 0 ? fit_half : held_half)
            .episodes.push_back(robot_corpus.episodes[i]);
    }

    CalibrationResult res;
    double best = kInf;
    for (double lambda : grid) {
        std::vector<std::vector<double>> r_fit, r_held;
        for (const Episode& ep : fit_half.episodes)
            r_fit.push_back(recompute_influence(ep, graph, lambda));
        for (const Episode& ep : held_half.episodes)
            r_held.push_back(recompute_influence(ep, graph, lambda));

        EffectModel m =
            fit_from(baseline, fit_half, graph, tau, n_min, &r_fit);
        m.lambda = lambda;

        double score = 0.0;
        for (std::size_t e = 0; e < held_half.episodes.size(); ++e) {
            const Episode& ep = held_half.episodes[e];
            for (std::size_t v = 0; v < ep.visits.size(); ++v) {
                const VisitEvent& ev = ep.visits[v];
                const std::size_t idx = graph.index_of(ev.region_id);
                OutcomeTriple base;
                base.dwell = resolved_mean(baseline, graph, idx,
                                           OutcomeKind::time, n_min);
                base.shots = resolved_mean(baseline, graph, idx,
                                           OutcomeKind::shots, n_min);
                base.victims = resolved_mean(baseline, graph, idx,
                                             OutcomeKind::victims, n_min);
                const OutcomeTriple pred =
                    modulate(base, r_held[e][v], m, idx,
                             resolved_max(baseline, graph, idx, n_min));
                if (ev.has_dwell()) {
                    const double d = ev.dwell_s - pred.dwell;
                    score += d * d;
                }
                const double ds = ev.shots - pred.shots;
                const double dv = ev.victims - pred.victims;
                score += ds * ds + dv * dv;
            }
        }

        res.curve.push_back(LambdaScore{lambda, score});
        if (score < best) {
            best = score;
            res.lambda = lambda;
        }
    }

    double lo = res.curve.front().score, hi = lo;
    for (const LambdaScore& s : res.curve) {
        lo = std::min(lo, s.score);
        hi = std::max(hi, s.score);
    }
    if (hi - lo <= 1e-9 * std::max(1.0, std::abs(hi))) {
        res.degenerate = true;
        std::cerr << "warning: lambda calibration curve is flat; influence "
                     "signal may be absent\n";
    }
    return res;
}

std::vector<std::size_t> impact_rank(const EffectModel& model,
                                     const MomentTable& baseline,
                                     const RegionGraph& graph, ImpactMode mode,
                                     int n_min) {
    std::vector<std::pair<double, std::size_t>> keyed;
    bool any = false;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        double k = model.k(i, OutcomeKind::victims);
        if (k != 0.0) any = true;
        if (mode == ImpactMode::rate) {
            const double dwell =
                resolved_mean(baseline, graph, i, OutcomeKind::time, n_min);
            if (dwell > 1e-12) k /= dwell;
        }
        keyed.emplace_back(k, i);
    }
    if (!any)
        std::cerr << "warning: impact ranking over all-zero victim "
                     "coefficients\n";
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return graph.region_at(a.second).id < graph.region_at(b.second).id;
    });
    std::vector<std::size_t> order;
    order.reserve(keyed.size());
    for (const auto& kv : keyed) order.push_back(kv.second);
    return order;
}

std::string effect_model_to_json(const EffectModel& model,
                                 const RegionGraph& graph) {
    json j;
    j["format"] = "effect-model-v1";
    j["lambda"] = model.lambda;
    j["tau"] = model.tau;
    json regions = json::object();
    for (std::size_t i = 0; i < model.coeff.size(); ++i) {
        json r = json::object();
        for (int o = 0; o < kOutcomeCount; ++o) {
            const EffectCoeff& c = model.coeff[i][o];
            r[outcome_name(static_cast<OutcomeKind>(o))] = {
                {"k", c.k}, {"suppressed", c.suppressed}, {"n", c.n}};
        }
        regions[std::to_string(graph.region_at(i).id)] = std::move(r);
    }
    j["regions"] = std::move(regions);
    return j.dump(2) + "\n";
}

EffectModel effect_model_from_json(const std::string& text,
                                   const RegionGraph& graph) {
    json j = json::parse(text);
    if (j.value("format", "") != "effect-model-v1")
        fail("unexpected effect model format tag '", j.value("format", ""),
             "'");
    EffectModel model;
    model.lambda = j.at("lambda").get<double>();
    model.tau = j.at("tau").get<double>();
    model.coeff.assign(graph.size(), {});
    for (const auto& [key, r] : j.at("regions").items()) {
        const std::size_t idx = graph.index_of(std::stoi(key));
        for (int o = 0; o < kOutcomeCount; ++o) {
            const json& c = r.at(outcome_name(static_cast<OutcomeKind>(o)));
            model.coeff[idx][o].k = c.at("k").get<double>();
            model.coeff[idx][o].suppressed = c.at("suppressed").get<bool>();
            model.coeff[idx][o].n = c.at("n").get<long long>();
        }
    }
    return model;
}

} // namespace desim
