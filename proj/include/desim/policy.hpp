#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "desim/engine.hpp"

namespace desim {

// Fixed-size per-robot action slots: slot 0 = stay, slots 1..A_max =
// out-neighbors in ascending id order. Slots beyond the region's degree
// (or filtered by the floor rule) are masked invalid.
struct ActionSet {
    int slots = 0; // max out-degree + 1

    static ActionSet for_graph(const RegionGraph& graph);

    // Destination index per slot (stay first); invalid slots get the
    // robot's current region but mask false.
    void robot_slots(const World& w, std::size_t robot,
                     std::vector<std::size_t>& dest,
                     std::vector<char>& mask) const;

    int joint_count() const { return slots * slots; }
    // Joint index = slot_r0 * slots + slot_r1.
    std::pair<int, int> split(int joint) const {
        return {joint / slots, joint % slots};
    }
};

// Per robot, per slot: post-move hop distance to the adversary divided by
// the graph diameter; invalid slots and unreachable destinations encode
// the sentinel 1.0. Width = 2 * slots.
Eigen::VectorXd obs_vector(const World& w, const ActionSet& actions);

// Joint mask: entry valid iff both robots' slots are valid.
std::vector<char> joint_mask(const World& w, const ActionSet& actions);

// Argmax over valid entries; ties resolve to the lowest index.
int masked_argmax(const Eigen::VectorXd& q, const std::vector<char>& mask);

// -alpha * (d1 + d2), distances capped at the graph diameter.
double pursuit_reward(const World& w, double alpha);

enum class Strategy { stay, pursue, to_low_impact, to_high_impact };
const char* strategy_name(Strategy s);
Strategy strategy_from_string(const std::string& s);

// Closed-form policies. Impact strategies need a fitted effect model and
// the baseline table to rank regions; both robots head to the same
// extreme, then hold.
std::unique_ptr<RobotPolicy> make_strategy(Strategy s,
                                           const EffectModel* effects,
                                           const MomentTable* baseline,
                                           ImpactMode mode = ImpactMode::rate);

} // namespace desim
