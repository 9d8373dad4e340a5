#include "desim/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "desim/common.hpp"
#include "json.hpp"

namespace desim {

namespace {

double elu(double x) { return x > 0.0 ? x : std::expm1(x); }
double elu_grad(double x) { return x > 0.0 ? 1.0 : std::exp(x); }

Eigen::MatrixXd glorot(Eigen::Index fan_in, Eigen::Index fan_out, Rng& rng) {
    const double lim = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Eigen::MatrixXd W(fan_in, fan_out);
    for (Eigen::Index i = 0; i < fan_in; ++i)
        for (Eigen::Index j = 0; j < fan_out; ++j)
            W(i, j) = rng.uniform(-lim, lim);
    return W;
}

Eigen::MatrixXd apply_elu(const Eigen::MatrixXd& P) {
    return P.unaryExpr([](double x) { return elu(x); });
}

Eigen::MatrixXd elu_grad_of(const Eigen::MatrixXd& P) {
    return P.unaryExpr([](double x) { return elu_grad(x); });
}

Eigen::MatrixXd dropout_mask(Eigen::Index rows, Eigen::Index cols, double p,
                             Rng& rng) {
    Eigen::MatrixXd m(rows, cols);
    const double keep = 1.0 - p;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = rng.uniform01() < p ? 0.0 : 1.0 / keep;
    return m;
}

Eigen::MatrixXd static_matrix(const RegionGraph& graph,
                              const FeatureRegistry& registry,
                              const FeatureSelection& sel) {
    if (sel.default_static_block) return default_static_features(graph);
    return registry_static_features(graph, registry, sel.static_names);
}

} // namespace

ScorerConfig reduced_scorer_config() {
    ScorerConfig cfg;
    cfg.hidden = 16;
    cfg.max_epochs = 30;
    cfg.batch = 128;
    return cfg;
}

ScorerWeights init_scorer(const ScorerConfig& cfg, int static_width,
                          std::uint64_t seed) {
    ScorerWeights w;
    w.static_width = static_width;
    w.hidden = cfg.hidden;
    w.sage_layers = cfg.sage_layers;
    w.features = cfg.features;

    Rng rng(seed);
    int in = static_width;
    for (int l = 0; l < cfg.sage_layers; ++l) {
        w.tensors.push_back(glorot(2 * in, cfg.hidden, rng));
        w.tensors.push_back(Eigen::MatrixXd::Zero(cfg.hidden, 1));
        in = cfg.hidden;
    }
    const int head_in = 2 * cfg.hidden + w.dyn_width();
    w.tensors.push_back(glorot(head_in, cfg.hidden, rng));
    w.tensors.push_back(Eigen::MatrixXd::Zero(cfg.hidden, 1));
    w.tensors.push_back(glorot(cfg.hidden, 1, rng));
    w.tensors.push_back(Eigen::MatrixXd::Zero(1, 1));
    return w;
}

Eigen::MatrixXd mean_aggregator(const RegionGraph& graph) {
    const auto n = static_cast<Eigen::Index>(graph.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& in = graph.in_indices(static_cast<std::size_t>(i));
        if (in.empty()) continue;
        const double w = 1.0 / static_cast<double>(in.size());
        for (std::size_t j : in) M(i, static_cast<Eigen::Index>(j)) = w;
    }
    return M;
}

std::vector<std::vector<TransitionSample>> build_episode_samples(
    const Corpus& corpus, const RegionGraph& graph,
    const FeatureRegistry& registry,
    const std::vector<std::string>& dynamic_names) {
    // Timing-unknown visits (external sequences) still define transitions;
    // they advance the clock by a fixed nominal dwell.
    constexpr double kNominalDwellS = 30.0;

    std::vector<const FeatureDef*> dyn;
    for (const auto& name : dynamic_names) {
        const FeatureDef& d = registry.get(name);
        if (!d.dynamic) fail("feature '", name, "' is not dynamic");
        dyn.push_back(&d);
    }

    std::vector<std::vector<TransitionSample>> out;
    for (const auto& ep : corpus.episodes) {
        std::vector<TransitionSample> samples;
        if (ep.visits.size() < 2) {
            out.push_back(std::move(samples));
            continue;
        }
        TransitionContext ctx;
        ctx.last_visit_s.assign(graph.size(), -1.0);
        double elapsed = 0.0;
        for (std::size_t i = 0; i + 1 < ep.visits.size(); ++i) {
            const VisitEvent& v = ep.visits[i];
            const VisitEvent& nxt = ep.visits[i + 1];
            elapsed += v.has_dwell() ? v.dwell_s : kNominalDwellS;

            ctx.current = v.region_id;
            ctx.previous = i > 0 ? ep.visits[i - 1].region_id : -1;
            ctx.elapsed_s = elapsed;
            ctx.visits_so_far = static_cast<int>(i + 1);

            const auto& nbrs = graph.neighbors(v.region_id);
            TransitionSample s;
            s.cur = graph.index_of(v.region_id);
            s.cands.reserve(nbrs.size());
            bool found = false;
            for (std::size_t c = 0; c < nbrs.size(); ++c) {
                s.cands.push_back(graph.index_of(nbrs[c]));
                if (nbrs[c] == nxt.region_id) {
                    s.target_slot = c;
                    found = true;
                }
            }
            if (!found)
                fail("episode ", ep.id, ": move ", v.region_id, " -> ",
                     nxt.region_id, " violates adjacency");

            s.dyn.resize(static_cast<Eigen::Index>(s.cands.size()),
                         static_cast<Eigen::Index>(dyn.size()));
            for (std::size_t c = 0; c < s.cands.size(); ++c)
                for (std::size_t f = 0; f < dyn.size(); ++f)
                    s.dyn(static_cast<Eigen::Index>(c),
                          static_cast<Eigen::Index>(f)) =
                        dyn[f]->fn(ctx, s.cands[c], graph);
            samples.push_back(std::move(s));

            ctx.last_visit_s[s.cur] = elapsed;
        }
        out.push_back(std::move(samples));
    }
    return out;
}

namespace {

struct SageCache {
    std::vector<Eigen::MatrixXd> Z;    // layer inputs [H | M H]
    std::vector<Eigen::MatrixXd> P;    // preactivations
    std::vector<Eigen::MatrixXd> H;    // activations, H[0] = X
    std::vector<Eigen::MatrixXd> mask; // dropout masks (empty = off)
};

SageCache sage_forward(const Eigen::MatrixXd& X, const Eigen::MatrixXd& M,
                       const ScorerWeights& w, double dropout,
                       Rng* dropout_rng) {
    SageCache c;
    c.H.push_back(X);
    for (int l = 0; l < w.sage_layers; ++l) {
        const Eigen::MatrixXd& H = c.H.back();
        Eigen::MatrixXd Z(H.rows(), 2 * H.cols());
        Z << H, M * H;
        Eigen::MatrixXd P =
            (Z * w.sage_W(l)).rowwise() + w.sage_b(l).col(0).transpose();
        Eigen::MatrixXd A = apply_elu(P);
        if (dropout_rng != nullptr && dropout > 0.0) {
            c.mask.push_back(dropout_mask(A.rows(), A.cols(), dropout,
                                          *dropout_rng));
            A = A.cwiseProduct(c.mask.back());
        }
        c.Z.push_back(std::move(Z));
        c.P.push_back(std::move(P));
        c.H.push_back(std::move(A));
    }
    return c;
}

} // namespace

Eigen::MatrixXd sage_embed(const RegionGraph& graph, const Eigen::MatrixXd& X,
                           const ScorerWeights& w) {
    if (X.cols() != w.static_width)
        fail("sage_embed: feature width ", X.cols(), " != expected ",
             w.static_width);
    const Eigen::MatrixXd M = mean_aggregator(graph);
    return sage_forward(X, M, w, 0.0, nullptr).H.back();
}

double scorer_loss_and_grads(const ScorerWeights& w, const Eigen::MatrixXd& X,
                             const Eigen::MatrixXd& M,
                             const std::vector<TransitionSample>& batch,
                             double l2, double dropout, Rng* dropout_rng,
                             std::vector<Eigen::MatrixXd>* grads) {
    if (batch.empty()) fail("scorer_loss_and_grads: empty batch");
    const int d = w.hidden;
    const int dynw = w.dyn_width();

    SageCache cache = sage_forward(X, M, w, dropout, dropout_rng);
    const Eigen::MatrixXd& E = cache.H.back();

    Eigen::Index rows = 0;
    for (const auto& s : batch) rows += static_cast<Eigen::Index>(s.cands.size());

    Eigen::MatrixXd U(rows, 2 * d + dynw);
    Eigen::Index r = 0;
    for (const auto& s : batch) {
        for (std::size_t c = 0; c < s.cands.size(); ++c, ++r) {
            U.block(r, 0, 1, d) = E.row(static_cast<Eigen::Index>(s.cur));
            U.block(r, d, 1, d) =
                E.row(static_cast<Eigen::Index>(s.cands[c]));
            if (dynw > 0)
                U.block(r, 2 * d, 1, dynw) =
                    s.dyn.row(static_cast<Eigen::Index>(c));
        }
    }

    Eigen::MatrixXd P1 =
        (U * w.head_W1()).rowwise() + w.head_b1().col(0).transpose();
    Eigen::MatrixXd Z1 = apply_elu(P1);
    Eigen::MatrixXd head_mask;
    if (dropout_rng != nullptr && dropout > 0.0) {
        head_mask = dropout_mask(Z1.rows(), Z1.cols(), dropout, *dropout_rng);
        Z1 = Z1.cwiseProduct(head_mask);
    }
    Eigen::VectorXd logits = (Z1 * w.head_w2()).col(0);
    logits.array() += w.head_b2()(0, 0);

    const double inv_b = 1.0 / static_cast<double>(batch.size());
    double loss = 0.0;
    Eigen::VectorXd dlogits = Eigen::VectorXd::Zero(rows);
    r = 0;
    for (const auto& s : batch) {
        const auto k = static_cast<Eigen::Index>(s.cands.size());
        const double mx = logits.segment(r, k).maxCoeff();
        Eigen::VectorXd ex = (logits.segment(r, k).array() - mx).exp();
        const double Zs = ex.sum();
        const auto tgt = static_cast<Eigen::Index>(s.target_slot);
        loss -= std::log(ex(tgt) / Zs) * inv_b;
        if (grads != nullptr) {
            for (Eigen::Index c = 0; c < k; ++c) {
                const double p = ex(c) / Zs;
                dlogits(r + c) = (p - (c == tgt ? 1.0 : 0.0)) * inv_b;
            }
        }
        r += k;
    }

    for (std::size_t t = 0; t < w.tensors.size(); t += 2)
        loss += l2 * w.tensors[t].squaredNorm();

    if (grads == nullptr) return loss;

    grads->clear();
    for (const auto& t : w.tensors)
        grads->push_back(Eigen::MatrixXd::Zero(t.rows(), t.cols()));
    auto& g = *grads;
    const int L = w.sage_layers;

    g[2 * L + 2] = Z1.transpose() * dlogits;          // w2
    g[2 * L + 3](0, 0) = dlogits.sum();               // b2
    Eigen::MatrixXd dZ1 = dlogits * w.head_w2().transpose();
    if (head_mask.size() > 0) dZ1 = dZ1.cwiseProduct(head_mask);
    Eigen::MatrixXd dP1 = dZ1.cwiseProduct(elu_grad_of(P1));
    g[2 * L] = U.transpose() * dP1;                   // W1
    g[2 * L + 1] = dP1.colwise().sum().transpose();   // b1
    Eigen::MatrixXd dU = dP1 * w.head_W1().transpose();

    Eigen::MatrixXd dE = Eigen::MatrixXd::Zero(E.rows(), E.cols());
    r = 0;
    for (const auto& s : batch) {
        for (std::size_t c = 0; c < s.cands.size(); ++c, ++r) {
            dE.row(static_cast<Eigen::Index>(s.cur)) += dU.block(r, 0, 1, d);
            dE.row(static_cast<Eigen::Index>(s.cands[c])) +=
                dU.block(r, d, 1, d);
        }
    }

    Eigen::MatrixXd dH = std::move(dE);
    for (int l = L - 1; l >= 0; --l) {
        if (!cache.mask.empty()) dH = dH.cwiseProduct(cache.mask[l]);
        const Eigen::MatrixXd dP = dH.cwiseProduct(elu_grad_of(cache.P[l]));
        g[2 * l] = cache.Z[l].transpose() * dP;
        g[2 * l + 1] = dP.colwise().sum().transpose();
        const Eigen::MatrixXd dZ = dP * w.sage_W(l).transpose();
        const auto in = cache.H[l].cols();
        dH = dZ.leftCols(in) + M.transpose() * dZ.rightCols(in);
    }

    for (std::size_t t = 0; t < w.tensors.size(); t += 2)
        g[t] += 2.0 * l2 * w.tensors[t];
    return loss;
}

namespace {

struct AdamState {
    std::vector<Eigen::MatrixXd> m, v;
    long long t = 0;

    explicit AdamState(const ScorerWeights& w) {
        for (const auto& tns : w.tensors) {
            m.push_back(Eigen::MatrixXd::Zero(tns.rows(), tns.cols()));
            v.push_back(Eigen::MatrixXd::Zero(tns.rows(), tns.cols()));
        }
    }

    void step(ScorerWeights& w, const std::vector<Eigen::MatrixXd>& g,
              double lr) {
        constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
        ++t;
        const double c1 = 1.0 - std::pow(b1, static_cast<double>(t));
        const double c2 = 1.0 - std::pow(b2, static_cast<double>(t));
        for (std::size_t i = 0; i < g.size(); ++i) {
            m[i] = b1 * m[i] + (1.0 - b1) * g[i];
            v[i] = b2 * v[i] + (1.0 - b2) * g[i].cwiseProduct(g[i]);
            const Eigen::ArrayXXd mh = m[i].array() / c1;
            const Eigen::ArrayXXd vh = v[i].array() / c2;
            w.tensors[i].array() -= lr * mh / (vh.sqrt() + eps);
        }
    }
};

std::vector<TransitionSample> flatten(
    const std::vector<std::vector<TransitionSample>>& eps) {
    std::vector<TransitionSample> out;
    for (const auto& e : eps) out.insert(out.end(), e.begin(), e.end());
    return out;
}

double eval_loss(const ScorerWeights& w, const Eigen::MatrixXd& X,
                 const Eigen::MatrixXd& M,
                 const std::vector<TransitionSample>& samples) {
    // Validation objective is the plain cross-entropy (no L2 term).
    return scorer_loss_and_grads(w, X, M, samples, 0.0, 0.0, nullptr, nullptr);
}

double eval_acc(const ScorerWeights& w, const RegionGraph& graph,
                const Eigen::MatrixXd& X,
                const std::vector<TransitionSample>& samples) {
    const Eigen::MatrixXd E = sage_embed(graph, X, w);
    const int d = w.hidden;
    const int dynw = w.dyn_width();
    std::size_t hits = 0;
    for (const auto& s : samples) {
        double best = -kInf;
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < s.cands.size(); ++c) {
            Eigen::VectorXd u(2 * d + dynw);
            u.segment(0, d) = E.row(static_cast<Eigen::Index>(s.cur)).transpose();
            u.segment(d, d) =
                E.row(static_cast<Eigen::Index>(s.cands[c])).transpose();
            if (dynw > 0)
                u.segment(2 * d, dynw) =
                    s.dyn.row(static_cast<Eigen::Index>(c)).transpose();
            const Eigen::VectorXd p1 =
                w.head_W1().transpose() * u + w.head_b1().col(0);
            const Eigen::VectorXd z1 =
                p1.unaryExpr([](double x) { return elu(x); });
            const double logit =
                z1.dot(w.head_w2().col(0)) + w.head_b2()(0, 0);
            if (logit > best) {
                best = logit;
                best_c = c;
            }
        }
        if (best_c == s.target_slot) ++hits;
    }
    return samples.empty() ? 0.0
                           : static_cast<double>(hits) /
                                 static_cast<double>(samples.size());
}

} // namespace

ScorerWeights train_scorer(const Corpus& train, const Corpus& val,
                           const RegionGraph& graph,
                           const FeatureRegistry& registry,
                           const ScorerConfig& cfg, TrainHistory* history) {
    if (train.episodes.empty() || val.episodes.empty())
        fail("train_scorer: empty corpus");

    const Eigen::MatrixXd X = static_matrix(graph, registry, cfg.features);
    const Eigen::MatrixXd M = mean_aggregator(graph);
    auto train_samples = flatten(build_episode_samples(
        train, graph, registry, cfg.features.dynamic_names));
    auto val_samples = flatten(build_episode_samples(
        val, graph, registry, cfg.features.dynamic_names));
    if (train_samples.empty() || val_samples.empty())
        fail("train_scorer: no transitions to learn from");

    Rng root(cfg.seed);
    ScorerWeights w = init_scorer(cfg, static_cast<int>(X.cols()),
                                  derive_seed(cfg.seed, "init"));
    AdamState adam(w);
    Rng shuffle_rng = root.derive("shuffle");
    Rng dropout_rng = root.derive("dropout");

    ScorerWeights best = w;
    double best_val = kInf;
    int since_best = 0, since_lr = 0;
    double lr = cfg.lr;
    std::vector<Eigen::MatrixXd> grads;
    std::vector<std::size_t> order(train_samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double epoch_loss = 0.0;
        std::size_t nb = 0;
        for (std::size_t at = 0; at < order.size();
             at += static_cast<std::size_t>(cfg.batch)) {
            std::vector<TransitionSample> batch;
            for (std::size_t i = at;
                 i < std::min(order.size(),
                              at + static_cast<std::size_t>(cfg.batch));
                 ++i)
                batch.push_back(train_samples[order[i]]);
            epoch_loss += scorer_loss_and_grads(w, X, M, batch, cfg.l2,
                                                cfg.dropout, &dropout_rng,
                                                &grads);
            adam.step(w, grads, lr);
            ++nb;
        }
        const double vloss = eval_loss(w, X, M, val_samples);
        if (history != nullptr) {
            history->train_loss.push_back(epoch_loss /
                                          static_cast<double>(nb));
            history->val_loss.push_back(vloss);
            history->val_acc.push_back(eval_acc(w, graph, X, val_samples));
        }
        if (cfg.verbose)
            std::cerr << "epoch " << epoch << " train "
                      << epoch_loss / static_cast<double>(nb) << " val "
                      << vloss << "\n";

        if (vloss < best_val - 1e-9) {
            best_val = vloss;
            best = w;
            since_best = 0;
            since_lr = 0;
            if (history != nullptr) history->best_epoch = epoch;
        } else {
            ++since_best;
            ++since_lr;
            if (since_best >= cfg.patience) break;
            if (since_lr >= cfg.lr_patience && lr > cfg.lr_floor) {
                lr = std::max(cfg.lr_floor, lr * 0.5);
                since_lr = 0;
            }
        }
    }
    return best;
}

Scorer::Scorer(ScorerWeights w, const RegionGraph& graph,
               const FeatureRegistry& registry)
    : w_(std::move(w)), graph_(&graph) {
    for (const auto& name : w_.features.dynamic_names) {
        const FeatureDef& d = registry.get(name);
        if (!d.dynamic) fail("feature '", name, "' is not dynamic");
        dyn_defs_.push_back(d);
    }
    const Eigen::MatrixXd X = static_matrix(graph, registry, w_.features);
    emb_ = sage_embed(graph, X, w_);
}

std::vector<double> Scorer::score_neighbors(const TransitionContext& ctx) const {
    const auto& nbrs = graph_->neighbors(ctx.current);
    if (nbrs.empty())
        fail("score_neighbors: region ", ctx.current, " has no neighbors");

    const int d = w_.hidden;
    const auto dynw = static_cast<int>(dyn_defs_.size());
    std::vector<double> logits(nbrs.size());
    const Eigen::Index cur =
        static_cast<Eigen::Index>(graph_->index_of(ctx.current));
    for (std::size_t c = 0; c < nbrs.size(); ++c) {
        const std::size_t ci = graph_->index_of(nbrs[c]);
        Eigen::VectorXd u(2 * d + dynw);
        u.segment(0, d) = emb_.row(cur).transpose();
        u.segment(d, d) = emb_.row(static_cast<Eigen::Index>(ci)).transpose();
        for (int f = 0; f < dynw; ++f)
            u(2 * d + f) = dyn_defs_[static_cast<std::size_t>(f)].fn(
                ctx, ci, *graph_);
        const Eigen::VectorXd p1 =
            w_.head_W1().transpose() * u + w_.head_b1().col(0);
        const Eigen::VectorXd z1 =
            p1.unaryExpr([](double x) { return elu(x); });
        logits[c] = z1.dot(w_.head_w2().col(0)) + w_.head_b2()(0, 0);
    }

    const double mx = *std::max_element(logits.begin(), logits.end());
    double total = 0.0;
    std::vector<double> probs(logits.size());
    for (std::size_t c = 0; c < logits.size(); ++c) {
        probs[c] = std::exp(logits[c] - mx);
        total += probs[c];
    }
    for (double& p : probs) p /= total;
    return probs;
}

int Scorer::argmax_next(const TransitionContext& ctx) const {
    const auto probs = score_neighbors(ctx);
    const auto& nbrs = graph_->neighbors(ctx.current);
    std::size_t best = 0;
    for (std::size_t c = 1; c < probs.size(); ++c)
        if (probs[c] > probs[best]) best = c;
    return nbrs[best];
}

int Scorer::sample_next(const TransitionContext& ctx, Rng& rng) const {
    const auto probs = score_neighbors(ctx);
    const auto& nbrs = graph_->neighbors(ctx.current);
    return nbrs[rng.weighted_index(probs)];
}

std::string scorer_to_json(const ScorerWeights& w) {
    nlohmann::json doc;
    doc["format"] = "scorer-v1";
    doc["hidden"] = w.hidden;
    doc["sage_layers"] = w.sage_layers;
    doc["static_width"] = w.static_width;
    doc["features"] = {{"default_static_block", w.features.default_static_block},
                       {"static_names", w.features.static_names},
                       {"dynamic_names", w.features.dynamic_names}};

    std::vector<std::string> names;
    for (int l = 0; l < w.sage_layers; ++l) {
        names.push_back(msg("sage", l, ".W"));
        names.push_back(msg("sage", l, ".b"));
    }
    names.insert(names.end(), {"head.W1", "head.b1", "head.w2", "head.b2"});

    nlohmann::json tensors = nlohmann::json::array();
    for (std::size_t i = 0; i < w.tensors.size(); ++i) {
        const auto& t = w.tensors[i];
        std::vector<double> data(t.data(), t.data() + t.size());
        tensors.push_back({{"name", names[i]},
                           {"rows", t.rows()},
                           {"cols", t.cols()},
                           {"data", data}});
    }
    doc["tensors"] = std::move(tensors);
    return doc.dump();
}

ScorerWeights scorer_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("scorer parse error: ", e.what());
    }
    if (doc.value("format", "") != "scorer-v1")
        fail("scorer: unknown format tag");

    ScorerWeights w;
    w.hidden = doc.at("hidden").get<int>();
    w.sage_layers = doc.at("sage_layers").get<int>();
    w.static_width = doc.at("static_width").get<int>();
    const auto& f = doc.at("features");
    w.features.default_static_block = f.at("default_static_block").get<bool>();
    w.features.static_names =
        f.at("static_names").get<std::vector<std::string>>();
    w.features.dynamic_names =
        f.at("dynamic_names").get<std::vector<std::string>>();

    for (const auto& t : doc.at("tensors")) {
        const auto rows = t.at("rows").get<Eigen::Index>();
        const auto cols = t.at("cols").get<Eigen::Index>();
        const auto data = t.at("data").get<std::vector<double>>();
        if (static_cast<Eigen::Index>(data.size()) != rows * cols)
            fail("scorer: tensor '", t.at("name").get<std::string>(),
                 "' size mismatch");
        Eigen::MatrixXd m(rows, cols);
        std::copy(data.begin(), data.end(), m.data());
        w.tensors.push_back(std::move(m));
    }
    const auto expect = static_cast<std::size_t>(2 * w.sage_layers + 4);
    if (w.tensors.size() != expect)
        fail("scorer: expected ", expect, " tensors, got ", w.tensors.size());
    return w;
}

} // namespace desim
