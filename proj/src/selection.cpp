#include "desim/selection.hpp"

#include <algorithm>
#include <limits>
#include <iostream>
#include <sstream>

#include "desim/common.hpp"
#include "desim/csv.hpp"
#include "desim/ingest.hpp"
#include "desim/math.hpp"
#include "desim/stats.hpp"

namespace desim {

TransitionModel TransitionModel::make(Heuristic h) {
    TransitionModel m;
    m.kind = Kind::heuristic;
    m.heuristic = h;
    return m;
}

TransitionModel TransitionModel::make(std::shared_ptr<const Scorer> s) {
    TransitionModel m;
    m.kind = Kind::gnn;
    m.scorer = std::move(s);
    return m;
}

TransitionModel TransitionModel::make_stay() {
    TransitionModel m;
    m.kind = Kind::stay;
    return m;
}

TransitionModel TransitionModel::make_custom(std::string name, Fn predict,
                                             Fn sample) {
    TransitionModel m;
    m.kind = Kind::custom;
    m.custom_name = std::move(name);
    m.custom_predict = std::move(predict);
    m.custom_sample = std::move(sample);
    return m;
}

std::string TransitionModel::name() const {
    switch (kind) {
    case Kind::gnn: return "GNN";
    case Kind::stay: return "STAY";
    case Kind::custom: return custom_name;
    default: return heuristic_name(heuristic);
    }
}

int TransitionModel::predict(const TransitionContext& ctx,
                             const RegionGraph& graph, Rng& rng) const {
    switch (kind) {
    case Kind::gnn: return scorer->argmax_next(ctx);
    case Kind::stay: return ctx.current;
    case Kind::custom: return custom_predict(ctx, graph, rng);
    default: return heuristic_next(heuristic, ctx, graph, rng);
    }
}

int TransitionModel::sample(const TransitionContext& ctx,
                            const RegionGraph& graph, Rng& rng) const {
    switch (kind) {
    case Kind::gnn: return scorer->sample_next(ctx, rng);
    case Kind::stay: return ctx.current;
    case Kind::custom: return custom_sample(ctx, graph, rng);
    default: return heuristic_next(heuristic, ctx, graph, rng);
    }
}

AccuracyResult eval_accuracy(const TransitionModel& model, const Corpus& corpus,
                             const RegionGraph& graph, const FeatureRegistry&,
                             std::uint64_t seed) {
    if (corpus.episodes.empty()) fail("accuracy evaluation: empty corpus");
    constexpr double kNominalDwellS = 30.0;

    AccuracyResult res;
    Rng rng(derive_seed(seed, "eval"));
    for (const auto& ep : corpus.episodes) {
        if (ep.visits.size() < 2) {
            ++res.skipped;
            continue;
        }
        TransitionContext ctx;
        ctx.last_visit_s.assign(graph.size(), -1.0);
        double elapsed = 0.0;
        int hits = 0, total = 0;
        for (std::size_t i = 0; i + 1 < ep.visits.size(); ++i) {
            const VisitEvent& v = ep.visits[i];
            elapsed += v.has_dwell() ? v.dwell_s : kNominalDwellS;
            ctx.current = v.region_id;
            ctx.previous = i > 0 ? ep.visits[i - 1].region_id : -1;
            ctx.elapsed_s = elapsed;
            ctx.visits_so_far = static_cast<int>(i + 1);
            const int predicted = model.predict(ctx, graph, rng);
            hits += predicted == ep.visits[i + 1].region_id ? 1 : 0;
            ++total;
            ctx.last_visit_s[graph.index_of(v.region_id)] = elapsed;
        }
        res.per_episode.push_back(double(hits) / double(total));
    }
    if (res.skipped > 0)
        std::cerr << "warning: skipped " << res.skipped
                  << " episode(s) with fewer than two visits\n";
    if (res.per_episode.empty())
        fail("accuracy evaluation: no episode has two or more visits");

    if (res.per_episode.size() >= 2) {
        const MeanCI ci = mean_ci(res.per_episode);
        res.mean = ci.mean;
        res.ci_lo = ci.lo;
        res.ci_hi = ci.hi;
    } else {
        // CI undefined from a single episode.
        res.mean = res.per_episode.front();
        res.ci_lo = res.ci_hi = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

namespace {

// Mean CV accuracy of a reduced scorer over the given feature set.
std::pair<double, double> cv_score(const Corpus& corpus,
                                   const FeatureRegistry& registry,
                                   const RegionGraph& graph,
                                   const std::vector<FoldPair>& fold_pairs,
                                   const FeatureSelection& sel,
                                   const ScorerConfig& base,
                                   std::uint64_t seed) {
    std::vector<double> accs;
    for (std::size_t f = 0; f < fold_pairs.size(); ++f) {
        ScorerConfig cfg = base;
        cfg.features = sel;
        cfg.seed = derive_seed(seed, "fold", f);
        ScorerWeights w = train_scorer(fold_pairs[f].train, fold_pairs[f].test,
                                       graph, registry, cfg);
        auto scorer = std::make_shared<Scorer>(std::move(w), graph, registry);
        const AccuracyResult acc =
            eval_accuracy(TransitionModel::make(scorer), fold_pairs[f].test,
                          graph, registry, cfg.seed);
        accs.push_back(acc.mean);
    }
    return {mean(accs), accs.size() > 1 ? sample_sd(accs) : 0.0};
}

} // namespace

SelectionResult greedy_select(const Corpus& corpus,
                              const FeatureRegistry& registry,
                              const RegionGraph& graph, std::size_t k,
                              std::size_t folds, std::uint64_t seed,
                              const ScorerConfig& base) {
    const std::vector<std::string> all = registry.names();
    if (all.empty()) fail("feature selection: empty registry");
    if (k > all.size())
        fail("feature selection: k=", k, " exceeds registry size ",
             all.size());

    const std::vector<FoldPair> fold_pairs =
        kfold_split(corpus, folds, derive_seed(seed, "folds"));

    SelectionResult res;
    std::vector<std::string> remaining = all;
    for (std::size_t stage = 0; stage < k; ++stage) {
        std::string best;
        double best_mean = -1.0;
        std::vector<SelectionTrial> stage_trials;
        for (const std::string& cand : remaining) {
            FeatureSelection sel;
            sel.default_static_block = false;
            sel.dynamic_names.clear();
            sel.static_names.clear();
            for (const std::string& name : res.selected)
                (registry.get(name).dynamic ? sel.dynamic_names
                                            : sel.static_names)
                    .push_back(name);
            (registry.get(cand).dynamic ? sel.dynamic_names : sel.static_names)
                .push_back(cand);

            const auto [m, sd] =
                cv_score(corpus, registry, graph, fold_pairs, sel, base,
                         derive_seed(seed, "stage:" + cand, stage));
            SelectionTrial t;
            t.stage = static_cast<int>(stage);
            t.feature = cand;
            t.mean_acc = m;
            t.sd = sd;
            stage_trials.push_back(t);
            if (m > best_mean) {
                best_mean = m;
                best = cand;
            }
        }
        for (SelectionTrial& t : stage_trials) {
            t.chosen = t.feature == best;
            res.trials.push_back(t);
        }
        res.selected.push_back(best);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }
    return res;
}

std::string selection_to_csv(const SelectionResult& res) {
    std::ostringstream out;
    out << "stage,feature,mean_acc,sd,chosen\n";
    for (const SelectionTrial& t : res.trials)
        out << t.stage << ',' << t.feature << ',' << fmt_g(t.mean_acc) << ','
            << fmt_g(t.sd) << ',' << (t.chosen ? 1 : 0) << '\n';
    return out.str();
}

} // namespace desim
