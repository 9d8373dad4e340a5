#include "desim/event_model.hpp"

#include <algorithm>
#include <cmath>

#include "desim/csv.hpp"
#include "desim/math.hpp"
#include "json.hpp"

namespace desim {

double feasible_halfwidth(double m, Bounds bounds) {
    if (!(bounds.L < m && m < bounds.U))
        fail("feasible_halfwidth: mean ", m, " outside (", bounds.L, ", ",
             bounds.U, ")");
    const double lo = m - bounds.L;
    if (std::isinf(bounds.U)) return lo;
    return std::min(lo, bounds.U - m);
}

TruncMoments trunc_moments(const TruncSpec& spec) {
    if (spec.deterministic) return {spec.mu0, 0.0};
    if (!(spec.sigma0 > 0.0)) fail("trunc_moments: sigma0 must be positive");

    const double alpha = (spec.a - spec.mu0) / spec.sigma0;
    const double beta = (spec.b - spec.mu0) / spec.sigma0;

    // Symmetric interval, sigma0 >> width: the direct formula cancels
    // catastrophically (1 + t - d^2 is ~beta^2/3 computed from O(1)
    // terms). Series in beta is exact to machine precision here.
    if (beta > 0.0 && std::fabs(alpha + beta) < 1e-12 * beta && beta < 0.05) {
        const double h = spec.b - spec.mu0;
        const double b2 = beta * beta;
        TruncMoments out;
        out.mean = spec.mu0;
        out.var = h * h *
                  (1.0 / 3.0 +
                   b2 * (-2.0 / 45.0 + b2 * (2.0 / 945.0 + b2 * 2.0 / 14175.0)));
        return out;
    }

    if ((spec.b - spec.a) / spec.sigma0 < 1e-10)
        fail("trunc_moments: interval degenerate relative to sigma0");
    const double Z = normal_cdf(beta) - normal_cdf(alpha);
    if (Z <= 0.0) fail("trunc_moments: zero mass in interval");
    const double pa = normal_pdf(alpha), pb = normal_pdf(beta);
    const double d = (pa - pb) / Z;

    TruncMoments out;
    out.mean = spec.mu0 + spec.sigma0 * d;
    const double t = (alpha * pa - beta * pb) / Z;
    out.var = spec.sigma0 * spec.sigma0 * (1.0 + t - d * d);
    return out;
}

TruncSpec match_moments(double m, double s2, Bounds bounds) {
    if (s2 < 0.0) fail("match_moments: negative target variance");

    TruncSpec spec;
    spec.mu0 = m;
    if (s2 == 0.0) {
        spec.deterministic = true;
        spec.a = spec.b = m;
        return spec;
    }

    const double h = feasible_halfwidth(m, bounds);
    spec.a = m - h;
    spec.b = m + h;

    const double uniform_limit = h * h / 3.0;
    double target = s2;
    if (s2 >= 0.98 * uniform_limit) {
        target = 0.98 * uniform_limit;
        spec.clamped = true;
    }

    auto var_at = [&spec](double sigma0) {
        TruncSpec probe = spec;
        probe.sigma0 = sigma0;
        return trunc_moments(probe).var;
    };

    double lo = 1e-6 * h, hi = 50.0 * h;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (var_at(mid) < target) lo = mid; else hi = mid;
        if ((hi - lo) / hi < 1e-12) break;
    }
    spec.sigma0 = 0.5 * (lo + hi);

    const double achieved = var_at(spec.sigma0);
    if (!spec.clamped && std::fabs(achieved - target) > 1e-8 * target)
        fail("match_moments: bisection failed (target ", target, ", achieved ",
             achieved, ")");
    return spec;
}

double sample_trunc(const TruncSpec& spec, Rng& rng) {
    if (spec.deterministic) return spec.mu0;
    const double alpha = (spec.a - spec.mu0) / spec.sigma0;
    const double beta = (spec.b - spec.mu0) / spec.sigma0;
    const double ca = normal_cdf(alpha), cb = normal_cdf(beta);
    const double u = ca + (cb - ca) * rng.uniform_open01();
    const double x = spec.mu0 + spec.sigma0 * normal_quantile(u);
    return std::clamp(x, spec.a, spec.b);
}

namespace {

const char* const kModeNames[3] = {"means", "sampling", "coupling"};

} // namespace

std::string variant_name(Variant v) {
    return msg(level_name(v.level), "-", kModeNames[static_cast<int>(v.mode)]);
}

Variant variant_from_string(const std::string& s) {
    const auto dash = s.find('-');
    if (dash == std::string::npos) fail("bad variant '", s, "'");
    Variant v;
    v.level = level_from_string(s.substr(0, dash));
    const std::string mode = s.substr(dash + 1);
    for (int i = 0; i < 3; ++i) {
        if (mode == kModeNames[i]) {
            v.mode = static_cast<GenMode>(i);
            return v;
        }
    }
    fail("bad variant '", s, "'");
}

Resolved resolve_level(const MomentTable& table, PoolLevel start,
                       std::size_t region_idx, Group g, OutcomeKind o,
                       int n_min) {
    if (table.global[static_cast<int>(o)].n == 0)
        fail("resolve_level: global table empty for ", outcome_name(o));

    auto usable = [n_min](const MomentCell& c) {
        return c.n >= n_min && c.var > 0.0;
    };

    if (start == PoolLevel::region) {
        const MomentCell& c = table.cell(PoolLevel::region, region_idx, g, o);
        if (usable(c)) return {c, PoolLevel::region, false};
        start = PoolLevel::group;
    }
    if (start == PoolLevel::group) {
        const MomentCell& c = table.cell(PoolLevel::group, region_idx, g, o);
        if (usable(c)) return {c, PoolLevel::group, false};
    }
    const MomentCell& c = table.global[static_cast<int>(o)];
    return {c, PoolLevel::global, c.var == 0.0};
}

namespace {

// Rates follow the same fallback cascade as their outcome so a sparse
// region borrows both moments and rates from the same granularity.
double resolved_rate(const MomentTable& table, const Resolved& r,
                     std::size_t region_idx, Group g, OutcomeKind o) {
    const RateCell& rc = table.rate(r.level, region_idx, g);
    return o == OutcomeKind::shots ? rc.shot_rate : rc.victim_rate;
}

double draw_outcome(const Resolved& r, Bounds bounds, Rng& rng) {
    if (r.deterministic || r.cell.var == 0.0) {
        double v = r.cell.mean;
        if (v < bounds.L) v = bounds.L;
        if (!std::isinf(bounds.U) && v > bounds.U) v = bounds.U;
        return v;
    }
    double m = r.cell.mean;
    if (m <= bounds.L) return bounds.L;
    if (m >= bounds.U) bounds.U = kInf;
    const TruncSpec spec = match_moments(m, r.cell.var, bounds);
    return sample_trunc(spec, rng);
}

} // namespace

OutcomeTriple gen_outcome(const EventModel& model, const RegionGraph& graph,
                          std::size_t region_idx, double time_U, Rng& rng) {
    const Group g = graph.region_at(region_idx).group;
    const PoolLevel start = model.variant.level;

    const Resolved rt = resolve_level(model.table, start, region_idx, g,
                                      OutcomeKind::time, model.n_min);
    const Resolved rs = resolve_level(model.table, start, region_idx, g,
                                      OutcomeKind::shots, model.n_min);
    const Resolved rv = resolve_level(model.table, start, region_idx, g,
                                      OutcomeKind::victims, model.n_min);
    const double victims_cap = rv.cell.max;

    OutcomeTriple out;
    switch (model.variant.mode) {
        case GenMode::means:
            out.dwell = rt.cell.mean;
            out.shots = rs.cell.mean;
            out.victims = rv.cell.mean;
            break;
        case GenMode::sampling:
            out.dwell = draw_outcome(rt, Bounds{0.0, time_U}, rng);
            out.shots = draw_outcome(rs, Bounds{0.0, kInf}, rng);
            out.victims = draw_outcome(rv, Bounds{0.0, victims_cap}, rng);
            break;
        case GenMode::coupling: {
            out.dwell = draw_outcome(rt, Bounds{0.0, time_U}, rng);
            const double sr = resolved_rate(model.table, rs, region_idx, g,
                                            OutcomeKind::shots);
            const double vr = resolved_rate(model.table, rv, region_idx, g,
                                            OutcomeKind::victims);
            out.shots = out.dwell * sr;
            out.victims = std::min(out.dwell * vr, victims_cap);
            break;
        }
    }
    return out;
}

std::string event_model_to_json(const EventModel& model,
                                const RegionGraph& graph) {
    nlohmann::json doc;
    doc["format"] = "event-model-v1";
    doc["n_min"] = model.n_min;
    doc["variant"] = variant_name(model.variant);
    doc["table"] = nlohmann::json::parse(moment_table_to_json(model.table, graph));
    return doc.dump(2);
}

EventModel event_model_from_json(const std::string& text,
                                 const RegionGraph& graph) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("event model parse error: ", e.what());
    }
    if (doc.value("format", "") != "event-model-v1")
        fail("event model: unknown format tag");
    EventModel m;
    m.n_min = doc.at("n_min").get<int>();
    m.variant = variant_from_string(doc.at("variant").get<std::string>());
    m.table = moment_table_from_json(doc.at("table").dump(), graph);
    return m;
}

std::string event_model_diag_csv(const EventModel& model,
                                 const RegionGraph& graph) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const Region& reg = graph.region_at(i);
        for (int o = 0; o < kOutcomeCount; ++o) {
            const auto kind = static_cast<OutcomeKind>(o);
            const Resolved r = resolve_level(model.table, model.variant.level,
                                             i, reg.group, kind, model.n_min);
            bool clamped = false;
            if (!r.deterministic && r.cell.var > 0.0 && r.cell.mean > 0.0) {
                const Bounds b{0.0, kind == OutcomeKind::victims ? r.cell.max
                                                                 : kInf};
                if (b.L < r.cell.mean && r.cell.mean < b.U)
                    clamped = match_moments(r.cell.mean, r.cell.var, b).clamped;
            }
            rows.push_back({std::to_string(reg.id), outcome_name(kind),
                            std::to_string(r.cell.n), fmt_g(r.cell.mean),
                            fmt_g(r.cell.var), fmt_g(r.cell.max),
                            level_name(r.level), clamped ? "1" : "0"});
        }
    }
    return to_csv({"region_id", "outcome", "n", "mean", "var", "max",
                   "level_used", "clamped"},
                  rows);
}

} // namespace desim
