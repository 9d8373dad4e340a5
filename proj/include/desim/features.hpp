#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "desim/region_graph.hpp"

namespace desim {

// Adversary state at a decision point. Vectors are indexed by region index.
struct TransitionContext {
    int current = 0;  // region id
    int previous = -1; // region id, -1 before the first move
    double elapsed_s = 0.0;
    std::vector<double> last_visit_s; // -1 = never visited
    std::vector<char> has_target;     // empty = all true
    int visits_so_far = 0;

    bool target_in(std::size_t idx) const {
        return has_target.empty() || has_target[idx];
    }
    double last_visit(std::size_t idx) const {
        return last_visit_s.empty() ? -1.0 : last_visit_s[idx];
    }
};

inline constexpr double kRecencyTau = 60.0; // seconds

// Cosine between the previous movement vector and the candidate movement
// vector; 0 without a previous region or when either vector is degenerate.
double direction_similarity(const TransitionContext& ctx, std::size_t cand_idx,
                            const RegionGraph& graph);

// exp(-dt / tau) since the candidate was last visited; 0 if never.
double recency(const TransitionContext& ctx, std::size_t cand_idx);

struct FeatureDef {
    std::string name;
    // Dynamic features depend on the episode state and enter the scoring
    // head; static ones are pure node attributes and feed message passing.
    bool dynamic = false;
    std::function<double(const TransitionContext&, std::size_t,
                         const RegionGraph&)>
        fn;
};

class FeatureRegistry {
public:
    // The standard candidate set for feature selection: six behavioral
    // features plus graph-theoretic extras.
    static FeatureRegistry standard();

    void add(FeatureDef def);
    const FeatureDef& get(const std::string& name) const;
    const std::vector<FeatureDef>& all() const { return defs_; }
    std::vector<std::string> names() const;

private:
    std::vector<FeatureDef> defs_;
};

// One scalar per registered feature, in registry order. The candidate must
// be adjacent to the context's current region.
std::vector<double> compute_features(const TransitionContext& ctx,
                                     int candidate_id,
                                     const RegionGraph& graph,
                                     const FeatureRegistry& registry);

// Node-feature matrix (regions x width) for the scorer's fixed default
// static block: group one-hot, betweenness, normalized area, is_entrance,
// is_outside, floor.
Eigen::MatrixXd default_static_features(const RegionGraph& graph);
inline constexpr int kDefaultStaticWidth = kGroupCount + 5;

// Node-feature matrix from chosen static registry features; falls back to
// a single constant column when the list is empty so the network always
// has a node signal to propagate.
Eigen::MatrixXd registry_static_features(const RegionGraph& graph,
                                         const FeatureRegistry& registry,
                                         const std::vector<std::string>& names);

} // namespace desim
