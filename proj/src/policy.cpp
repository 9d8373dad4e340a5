#include "desim/policy.hpp"

#include <algorithm>

#include "desim/common.hpp"

namespace desim {

ActionSet ActionSet::for_graph(const RegionGraph& graph) {
    std::size_t deg = 0;
    for (std::size_t i = 0; i < graph.size(); ++i)
        deg = std::max(deg, graph.out_indices(i).size());
    ActionSet a;
    a.slots = static_cast<int>(deg) + 1;
    return a;
}

void ActionSet::robot_slots(const World& w, std::size_t robot,
                            std::vector<std::size_t>& dest,
                            std::vector<char>& mask) const {
    const std::size_t cur = w.robots[robot].region;
    dest.assign(slots, cur);
    mask.assign(slots, 0);
    mask[0] = 1; // stay
    const auto moves = w.robot_moves(robot);
    // moves[0] is the stay entry; neighbors follow in ascending order.
    for (std::size_t m = 1; m < moves.size(); ++m) {
        dest[m] = moves[m];
        mask[m] = 1;
    }
}

Eigen::VectorXd obs_vector(const World& w, const ActionSet& actions) {
    const double diam = std::max(1, w.graph->diameter());
    Eigen::VectorXd obs(2 * actions.slots);
    obs.setOnes();
    std::vector<std::size_t> dest;
    std::vector<char> mask;
    for (std::size_t r = 0; r < w.robots.size() && r < 2; ++r) {
        actions.robot_slots(w, r, dest, mask);
        for (int s = 0; s < actions.slots; ++s) {
            if (!mask[s]) continue;
            double d = w.graph->hop_dist(dest[s], w.adv);
            if (!std::isfinite(d) || d > diam) d = diam;
            obs[static_cast<int>(r) * actions.slots + s] = d / diam;
        }
    }
    return obs;
}

std::vector<char> joint_mask(const World& w, const ActionSet& actions) {
    if (w.robots.size() < 2) fail("joint mask needs two robots");
    std::vector<std::size_t> dest;
    std::vector<char> m0, m1;
    actions.robot_slots(w, 0, dest, m0);
    actions.robot_slots(w, 1, dest, m1);
    std::vector<char> joint(actions.joint_count(), 0);
    for (int a = 0; a < actions.slots; ++a)
        for (int b = 0; b < actions.slots; ++b)
            joint[a * actions.slots + b] = m0[a] && m1[b] ? 1 : 0;
    return joint;
}

int masked_argmax(const Eigen::VectorXd& q, const std::vector<char>& mask) {
    if (static_cast<std::size_t>(q.size()) != mask.size())
        fail("masked argmax: size mismatch");
    int best = -1;
    for (int i = 0; i < q.size(); ++i) {
        if (!mask[i]) continue;
        if (best < 0 || q[i] > q[best]) best = i;
    }
    if (best < 0) fail("masked argmax: no valid action");
    return best;
}

double pursuit_reward(const World& w, double alpha) {
    const double diam = std::max(1, w.graph->diameter());
    double sum = 0.0;
    for (std::size_t r = 0; r < w.robots.size(); ++r)
        sum += std::min(w.robot_distance(r), diam);
    return -alpha * sum;
}

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::stay: return "stay";
    case Strategy::pursue: return "pursue";
    case Strategy::to_low_impact: return "low-impact";
    case Strategy::to_high_impact: return "high-impact";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "stay") return Strategy::stay;
    if (s == "pursue") return Strategy::pursue;
    if (s == "low-impact") return Strategy::to_low_impact;
    if (s == "high-impact") return Strategy::to_high_impact;
    fail("unknown strategy '", s, "'");
}

namespace {

class StayPolicy : public RobotPolicy {
public:
    void decide(World&, Rng&) override {}
};

// Each idle robot takes the valid move minimizing post-move hop distance
// to the adversary; ties keep the earliest slot (stay first, then lowest
// region id).
class PursuePolicy : public RobotPolicy {
public:
    void decide(World& w, Rng&) override {
        for (std::size_t r = 0; r < w.robots.size(); ++r) {
            if (!w.robot_idle(r)) continue;
            const auto moves = w.robot_moves(r);
            std::size_t best = moves[0];
            double best_d = w.graph->hop_dist(moves[0], w.adv);
            for (std::size_t m = 1; m < moves.size(); ++m) {
                const double d = w.graph->hop_dist(moves[m], w.adv);
                if (d < best_d) {
                    best_d = d;
                    best = moves[m];
                }
            }
            w.set_robot_dest(r, best);
        }
    }
};

class ImpactPolicy : public RobotPolicy {
public:
    ImpactPolicy(const EffectModel* effects, const MomentTable* baseline,
                 ImpactMode mode, bool high)
        : effects_(effects), baseline_(baseline), mode_(mode), high_(high) {}

    void episode_start(World& w, Rng&) override {
        const auto order =
            impact_rank(*effects_, *baseline_, *w.graph, mode_);
        target_ = high_ ? order.front() : order.back();
    }

    void decide(World& w, Rng&) override {
        for (std::size_t r = 0; r < w.robots.size(); ++r) {
            if (!w.robot_idle(r)) continue;
            if (w.robots[r].region == target_) continue;
            const auto moves = w.robot_moves(r);
            std::size_t best = moves[0];
            double best_d = w.graph->hop_dist(moves[0], target_);
            for (std::size_t m = 1; m < moves.size(); ++m) {
                const double d = w.graph->hop_dist(moves[m], target_);
                if (d < best_d) {
                    best_d = d;
                    best = moves[m];
                }
            }
            w.set_robot_dest(r, best);
        }
    }

private:
    const EffectModel* effects_;
    const MomentTable* baseline_;
    ImpactMode mode_;
    bool high_;
    std::size_t target_ = 0;
};

} // namespace

std::unique_ptr<RobotPolicy> make_strategy(Strategy s,
                                           const EffectModel* effects,
                                           const MomentTable* baseline,
                                           ImpactMode mode) {
    switch (s) {
    case Strategy::stay: return std::make_unique<StayPolicy>();
    case Strategy::pursue: return std::make_unique<PursuePolicy>();
    case Strategy::to_low_impact:
    case Strategy::to_high_impact:
        if (!effects || !baseline)
            fail("impact strategy needs a fitted effect model");
        return std::make_unique<ImpactPolicy>(
            effects, baseline, mode, s == Strategy::to_high_impact);
    }
    fail("unknown strategy");
}

} // namespace desim
