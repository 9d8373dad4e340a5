#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "desim/features.hpp"
#include "desim/records.hpp"
#include "desim/region_graph.hpp"
#include "desim/rng.hpp"

namespace desim {

// Which features the scorer consumes. The default static block is the
// fixed node-attribute matrix (group one-hot, betweenness, area, flags,
// floor); selection experiments instead name registry features explicitly.
struct FeatureSelection {
    bool default_static_block = true;
    std::vector<std::string> static_names;
    std::vector<std::string> dynamic_names = {"direction_similarity", "recency",
                                              "has_target"};
};

struct ScorerConfig {
    int hidden = 64;
    int sage_layers = 3;
    double lr = 1e-3;
    double lr_floor = 1e-5;
    int lr_patience = 5; // epochs without val improvement before halving
    int batch = 32;
    int max_epochs = 200;
    int patience = 15; // early-stopping epochs
    double l2 = 1e-4;
    double dropout = 0.1;
    std::uint64_t seed = 1;
    FeatureSelection features;
    bool verbose = false;
};

// Greedy feature selection trains many scorers; this keeps it tractable.
ScorerConfig reduced_scorer_config();

// Parameters laid out as a flat tensor list: for each message-passing
// layer W (2*in x out) and b (out x 1), then head W1, b1, w2, b2.
struct ScorerWeights {
    std::vector<Eigen::MatrixXd> tensors;
    int static_width = 0;
    int hidden = 0;
    int sage_layers = 0;
    FeatureSelection features;

    int dyn_width() const {
        return static_cast<int>(features.dynamic_names.size());
    }
    Eigen::MatrixXd& sage_W(int l) { return tensors[2 * l]; }
    Eigen::MatrixXd& sage_b(int l) { return tensors[2 * l + 1]; }
    const Eigen::MatrixXd& sage_W(int l) const { return tensors[2 * l]; }
    const Eigen::MatrixXd& sage_b(int l) const { return tensors[2 * l + 1]; }
    Eigen::MatrixXd& head_W1() { return tensors[2 * sage_layers]; }
    Eigen::MatrixXd& head_b1() { return tensors[2 * sage_layers + 1]; }
    Eigen::MatrixXd& head_w2() { return tensors[2 * sage_layers + 2]; }
    Eigen::MatrixXd& head_b2() { return tensors[2 * sage_layers + 3]; }
    const Eigen::MatrixXd& head_W1() const { return tensors[2 * sage_layers]; }
    const Eigen::MatrixXd& head_b1() const {
        return tensors[2 * sage_layers + 1];
    }
    const Eigen::MatrixXd& head_w2() const {
        return tensors[2 * sage_layers + 2];
    }
    const Eigen::MatrixXd& head_b2() const {
        return tensors[2 * sage_layers + 3];
    }
};

// Glorot-uniform initialization, biases zero.
ScorerWeights init_scorer(const ScorerConfig& cfg, int static_width,
                          std::uint64_t seed);

// One observed transition with its candidate set preprocessed.
struct TransitionSample {
    std::size_t cur = 0;
    std::vector<std::size_t> cands;
    Eigen::MatrixXd dyn; // cands x dyn_width
    std::size_t target_slot = 0;
};

// Per-episode transition samples. Episodes with fewer than two timed
// visits contribute nothing. Throws if an observed move violates
// adjacency (that is a data bug, not a modeling outcome).
std::vector<std::vector<TransitionSample>> build_episode_samples(
    const Corpus& corpus, const RegionGraph& graph,
    const FeatureRegistry& registry,
    const std::vector<std::string>& dynamic_names);

// In-neighbor mean aggregation matrix.
Eigen::MatrixXd mean_aggregator(const RegionGraph& graph);

// Full-graph embeddings, inference mode (no dropout).
Eigen::MatrixXd sage_embed(const RegionGraph& graph, const Eigen::MatrixXd& X,
                           const ScorerWeights& w);

// Cross-entropy loss (mean over samples) plus L2 penalty; fills `grads`
// with matching shapes. Pass dropout_rng = nullptr for a deterministic
// pass (used in evaluation and gradient checks).
double scorer_loss_and_grads(const ScorerWeights& w, const Eigen::MatrixXd& X,
                             const Eigen::MatrixXd& M,
                             const std::vector<TransitionSample>& batch,
                             double l2, double dropout, Rng* dropout_rng,
                             std::vector<Eigen::MatrixXd>* grads);

struct TrainHistory {
    std::vector<double> train_loss;
    std::vector<double> val_loss;
    std::vector<double> val_acc;
    int best_epoch = -1;
};

// Adam + early stopping on validation loss; returns the best-validation
// weights. Fully seeded: same inputs and seed give identical weights.
ScorerWeights train_scorer(const Corpus& train, const Corpus& val,
                           const RegionGraph& graph,
                           const FeatureRegistry& registry,
                           const ScorerConfig& cfg,
                           TrainHistory* history = nullptr);

// Inference wrapper: caches embeddings for the graph.
class Scorer {
public:
    Scorer(ScorerWeights w, const RegionGraph& graph,
           const FeatureRegistry& registry);

    const ScorerWeights& weights() const { return w_; }

    // Probability per out-neighbor of ctx.current, ascending id order.
    std::vector<double> score_neighbors(const TransitionContext& ctx) const;

    // Highest-probability neighbor id, ties to the lowest id.
    int argmax_next(const TransitionContext& ctx) const;

    // Draw from the predicted distribution.
    int sample_next(const TransitionContext& ctx, Rng& rng) const;

private:
    ScorerWeights w_;
    const RegionGraph* graph_;
    std::vector<FeatureDef> dyn_defs_;
    Eigen::MatrixXd emb_;
};

std::string scorer_to_json(const ScorerWeights& w);
ScorerWeights scorer_from_json(const std::string& text);

} // namespace desim
