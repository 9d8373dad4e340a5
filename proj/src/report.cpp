#include "desim/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "desim/common.hpp"
#include "desim/csv.hpp"
#include "desim/math.hpp"
#include "nlohmann/json.hpp"

namespace desim {

const char* color_name(MatchColor c) {
    switch (c) {
    case MatchColor::green: return "green";
    case MatchColor::yellow: return "yellow";
    case MatchColor::red: return "red";
    }
    return "?";
}

std::vector<EpisodeSummary> summarize(const Corpus& corpus) {
    std::vector<EpisodeSummary> out;
    for (const Episode& ep : corpus.episodes) {
        EpisodeSummary s;
        s.nodes = static_cast<double>(ep.visits.size());
        bool timed = false;
        for (const VisitEvent& v : ep.visits) {
            if (v.has_dwell()) {
                s.time += v.dwell_s;
                timed = true;
            }
            s.shots += v.shots;
            s.victims += v.victims;
        }
        if (!timed) s.time = std::numeric_limits<double>::quiet_NaN();
        out.push_back(s);
    }
    return out;
}

std::vector<EpisodeSummary> summarize(const std::vector<RolloutLog>& logs) {
    std::vector<EpisodeSummary> out;
    for (const RolloutLog& log : logs) {
        EpisodeSummary s;
        s.nodes = log.summary.nodes;
        s.time = log.summary.total_time;
        s.shots = log.summary.shots;
        s.victims = log.summary.victims;
        out.push_back(s);
    }
    return out;
}

std::vector<double> spatial_share(const Corpus& corpus,
                                  const RegionGraph& graph, OutcomeKind o) {
    std::vector<double> mass(graph.size(), 0.0);
    double total = 0.0;
    for (const Episode& ep : corpus.episodes) {
        for (const VisitEvent& v : ep.visits) {
            double x = 0.0;
            switch (o) {
            case OutcomeKind::time:
                if (!v.has_dwell()) continue;
                x = v.dwell_s;
                break;
            case OutcomeKind::shots: x = v.shots; break;
            case OutcomeKind::victims: x = v.victims; break;
            }
            mass[graph.index_of(v.region_id)] += x;
            total += x;
        }
    }
    if (total > 0)
        for (double& m : mass) m /= total;
    return mass;
}

double value_jsd(const std::vector<double>& gen, const std::vector<double>& obs,
                 int bins) {
    if (gen.empty() || obs.empty()) fail("value jsd: empty sample");
    double lo = gen[0], hi = gen[0];
    for (double v : gen) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (double v : obs) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi <= lo) hi = lo + 1.0;
    return jsd_bits(histogram(gen, lo, hi, bins), histogram(obs, lo, hi, bins));
}

namespace {

std::vector<double> column(const std::vector<EpisodeSummary>& s,
                           const std::string& name) {
    std::vector<double> out;
    for (const EpisodeSummary& e : s) {
        double v = 0.0;
        if (name == "nodes") v = e.nodes;
        else if (name == "time") v = e.time;
        else if (name == "shots") v = e.shots;
        else v = e.victims;
        if (!std::isnan(v)) out.push_back(v);
    }
    return out;
}

// Per-visit (dwell, shots) and (dwell, victims) pairs, pooled.
void dwell_pairs(const Corpus& corpus, std::vector<double>& t,
                 std::vector<double>& s, std::vector<double>& v) {
    for (const Episode& ep : corpus.episodes) {
        for (const VisitEvent& ev : ep.visits) {
            if (!ev.has_dwell()) continue;
            t.push_back(ev.dwell_s);
            s.push_back(ev.shots);
            v.push_back(ev.victims);
        }
    }
}

MatchColor color_of(const TestResult& w, const TestResult& l) {
    const int ok = (w.p > 0.05 ? 1 : 0) + (l.p > 0.05 ? 1 : 0);
    return ok == 2 ? MatchColor::green
                   : (ok == 1 ? MatchColor::yellow : MatchColor::red);
}

} // namespace

FidelityReport fidelity_report(const Corpus& generated, const Corpus& observed,
                               const RegionGraph& graph) {
    if (generated.episodes.empty() || observed.episodes.empty())
        fail("fidelity report: empty corpus");

    const auto gen_s = summarize(generated);
    const auto obs_s = summarize(observed);

    FidelityReport rep;
    for (const char* name : {"nodes", "time", "shots", "victims"}) {
        const auto g = column(gen_s, name);
        const auto o = column(obs_s, name);
        OutcomeFidelity f;
        f.outcome = name;
        f.gen_mean = mean(g);
        f.gen_sd = g.size() > 1 ? sample_sd(g) : 0.0;
        f.obs_mean = mean(o);
        f.obs_sd = o.size() > 1 ? sample_sd(o) : 0.0;
        f.welch = welch_t(g, o);
        f.levene = levene(g, o);
        f.color = color_of(f.welch, f.levene);
        rep.outcomes.push_back(std::move(f));
    }

    auto spatial_jsd = [&](OutcomeKind o) {
        const auto g = spatial_share(generated, graph, o);
        const auto ob = spatial_share(observed, graph, o);
        const auto total = [](const std::vector<double>& v) {
            double t = 0.0;
            for (double x : v) t += x;
            return t;
        };
        if (total(g) == 0.0 || total(ob) == 0.0)
            return std::numeric_limits<double>::quiet_NaN();
        return jsd_bits(g, ob);
    };
    rep.st.jsd_time = spatial_jsd(OutcomeKind::time);
    rep.st.jsd_shots = spatial_jsd(OutcomeKind::shots);
    rep.st.jsd_victims = spatial_jsd(OutcomeKind::victims);

    std::vector<double> gt, gs, gv, ot, os, ov;
    dwell_pairs(generated, gt, gs, gv);
    dwell_pairs(observed, ot, os, ov);
    rep.st.rho_ts_model = spearman_rho(gt, gs);
    rep.st.rho_tv_model = spearman_rho(gt, gv);
    rep.st.rho_ts_emp = spearman_rho(ot, os);
    rep.st.rho_tv_emp = spearman_rho(ot, ov);
    rep.st.d_rho_ts = rep.st.rho_ts_model - rep.st.rho_ts_emp;
    rep.st.d_rho_tv = rep.st.rho_tv_model - rep.st.rho_tv_emp;
    return rep;
}

namespace {

std::string cell(double m, double sd) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << m << " +/- " << sd;
    return out.str();
}

std::string marks(const TestResult& w, const TestResult& l) {
    std::string s;
    s += w.p > 0.05 ? 'y' : 'x';
    s += l.p > 0.05 ? 'y' : 'x';
    return s;
}

} // namespace

std::string outcomes_table_csv(const std::vector<EpisodeSummary>& observed,
                               const std::vector<VariantRow>& rows) {
    std::ostringstream out;
    out << "pooling,variant,nodes,time,shots,victims,"
           "nodes_marks,time_marks,shots_marks,victims_marks,"
           "nodes_color,time_color,shots_color,victims_color\n";

    out << "-,participants";
    for (const char* name : {"nodes", "time", "shots", "victims"}) {
        const auto o = column(observed, name);
        out << ',' << cell(mean(o), o.size() > 1 ? sample_sd(o) : 0.0);
    }
    out << ",,,,,,,,\n";

    for (const VariantRow& r : rows) {
        out << r.pooling << ',' << r.variant;
        for (const OutcomeFidelity& f : r.rep.outcomes)
            out << ',' << cell(f.gen_mean, f.gen_sd);
        for (const OutcomeFidelity& f : r.rep.outcomes)
            out << ',' << marks(f.welch, f.levene);
        for (const OutcomeFidelity& f : r.rep.outcomes)
            out << ',' << color_name(f.color);
        out << '\n';
    }
    return out.str();
}

std::string fidelity_table_csv(const std::vector<VariantRow>& rows) {
    std::ostringstream out;
    out << "pooling,variant,jsd_time,jsd_shots,jsd_victims,"
           "rho_ts,delta_rho_ts,rho_tv,delta_rho_tv\n";
    for (const VariantRow& r : rows) {
        const SpatialTemporal& st = r.rep.st;
        out << r.pooling << ',' << r.variant << ',' << fmt_g(st.jsd_time, 6)
            << ',' << fmt_g(st.jsd_shots, 6) << ','
            << fmt_g(st.jsd_victims, 6) << ',' << fmt_g(st.rho_ts_model, 6)
            << ',' << fmt_g(st.d_rho_ts, 6) << ',' << fmt_g(st.rho_tv_model, 6)
            << ',' << fmt_g(st.d_rho_tv, 6) << '\n';
    }
    return out.str();
}

std::string strategy_table_csv(const std::vector<StrategyRow>& rows) {
    if (rows.empty()) fail("strategy table: no rows");
    std::ostringstream out;
    out << "strategy,sf_victims,sf_delta_pct,mf_victims,mf_delta_pct\n";
    const double base_sf = rows.front().sf_mean;
    const double base_mf = rows.front().mf_mean;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const StrategyRow& r = rows[i];
        out << r.strategy << ',' << cell(r.sf_mean, r.sf_sd) << ',';
        if (i == 0)
            out << '-';
        else
            out << fmt_g(100.0 * (r.sf_mean - base_sf) / base_sf, 4);
        out << ',' << cell(r.mf_mean, r.mf_sd) << ',';
        if (i == 0)
            out << '-';
        else
            out << fmt_g(100.0 * (r.mf_mean - base_mf) / base_mf, 4);
        out << '\n';
    }
    return out.str();
}

std::vector<ModelComparisonRow> compare_models(
    const std::vector<TransitionModel>& models, const Corpus& corpus,
    const RegionGraph& graph, const FeatureRegistry& registry,
    std::uint64_t seed) {
    if (models.empty()) fail("model comparison: no models");

    std::vector<AccuracyResult> accs;
    for (std::size_t i = 0; i < models.size(); ++i)
        accs.push_back(eval_accuracy(models[i], corpus, graph, registry,
                                     derive_seed(seed, "model", i)));

    // Reference = the GNN when present, else the best mean.
    std::size_t ref = 0;
    bool have_gnn = false;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (models[i].kind == TransitionModel::Kind::gnn) {
            ref = i;
            have_gnn = true;
            break;
        }
    }
    if (!have_gnn)
        for (std::size_t i = 1; i < accs.size(); ++i)
            if (accs[i].mean > accs[ref].mean) ref = i;

    std::vector<ModelComparisonRow> rows;
    for (std::size_t i = 0; i < models.size(); ++i) {
        ModelComparisonRow r;
        r.model = models[i].name();
        r.mean = accs[i].mean;
        r.ci_lo = accs[i].ci_lo;
        r.ci_hi = accs[i].ci_hi;
        if (i != ref)
            r.stars =
                welch_t(accs[i].per_episode, accs[ref].per_episode).stars;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string comparison_csv(const std::vector<ModelComparisonRow>& rows) {
    std::ostringstream out;
    out << "model,mean,ci_low,ci_high,stars\n";
    for (const ModelComparisonRow& r : rows)
        out << r.model << ',' << fmt_g(r.mean, 8) << ',' << fmt_g(r.ci_lo, 8)
            << ',' << fmt_g(r.ci_hi, 8) << ',' << r.stars << '\n';
    return out.str();
}

std::string fidelity_report_json(const FidelityReport& rep) {
    nlohmann::json j;
    nlohmann::json outs = nlohmann::json::array();
    for (const OutcomeFidelity& f : rep.outcomes) {
        outs.push_back({{"outcome", f.outcome},
                        {"gen_mean", f.gen_mean},
                        {"gen_sd", f.gen_sd},
                        {"obs_mean", f.obs_mean},
                        {"obs_sd", f.obs_sd},
                        {"welch_t", f.welch.statistic},
                        {"welch_df", f.welch.df},
                        {"welch_p", f.welch.p},
                        {"levene_W", f.levene.statistic},
                        {"levene_p", f.levene.p},
                        {"color", color_name(f.color)}});
    }
    j["outcomes"] = std::move(outs);
    j["spatial_jsd"] = {{"time", rep.st.jsd_time},
                        {"shots", rep.st.jsd_shots},
                        {"victims", rep.st.jsd_victims}};
    j["temporal"] = {{"rho_ts", rep.st.rho_ts_model},
                     {"rho_ts_ref", rep.st.rho_ts_emp},
                     {"delta_rho_ts", rep.st.d_rho_ts},
                     {"rho_tv", rep.st.rho_tv_model},
                     {"rho_tv_ref", rep.st.rho_tv_emp},
                     {"delta_rho_tv", rep.st.d_rho_tv}};
    // Spatial JSD compares per-region outcome-share vectors.
    j["spatial_jsd_definition"] = "per-region outcome share";
    return j.dump(2) + "\n";
}

} // namespace desim
