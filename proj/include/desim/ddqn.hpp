#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "desim/policy.hpp"

namespace desim {

// Two-layer perceptron over joint action values. Parameters sit in a flat
// tensor list (W1, b1, W2, b2) so the optimizer and the gradient checks
// can iterate uniformly.
struct QNet {
    std::vector<Eigen::MatrixXd> t;

    Eigen::MatrixXd& W1() { return t[0]; }
    Eigen::MatrixXd& b1() { return t[1]; }
    Eigen::MatrixXd& W2() { return t[2]; }
    Eigen::MatrixXd& b2() { return t[3]; }
    const Eigen::MatrixXd& W1() const { return t[0]; }
    const Eigen::MatrixXd& b1() const { return t[1]; }
    const Eigen::MatrixXd& W2() const { return t[2]; }
    const Eigen::MatrixXd& b2() const { return t[3]; }

    int in_width() const { return static_cast<int>(W1().cols()); }
    int out_width() const { return static_cast<int>(W2().rows()); }

    Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
};

QNet init_qnet(int in, int hidden, int out, std::uint64_t seed);

struct QSample {
    Eigen::VectorXd x;
    int action = 0;
    double y = 0.0;
};

// Mean squared error over the selected action entries; fills grads with
// shapes matching net.t.
double qnet_loss_and_grads(const QNet& net, const std::vector<QSample>& batch,
                           std::vector<Eigen::MatrixXd>* grads);

struct Transition {
    Eigen::VectorXd obs, next_obs;
    std::vector<char> next_mask;
    int action = 0;
    double reward = 0.0;
    bool terminal = false;
};

class ReplayBuffer {
public:
    explicit ReplayBuffer(std::size_t capacity);
    void push(Transition tr);
    std::size_t size() const { return full_ ? buf_.size() : next_; }
    const Transition& at(std::size_t i) const { return buf_[i]; }
    // Uniform without replacement.
    std::vector<std::size_t> sample(std::size_t k, Rng& rng) const;

private:
    std::vector<Transition> buf_;
    std::size_t next_ = 0;
    bool full_ = false;
};

struct DdqnConfig {
    int episodes = 15000;
    double gamma = 0.99;
    double eps_start = 1.0;
    double eps_end = 0.05;
    int eps_decay_episodes = 10000;
    double lr = 1e-3;
    int batch = 64;
    int replay_capacity = 50000;
    int target_sync = 1000; // gradient steps between target refreshes
    int hidden = 128;
    double alpha = -1.0;    // reward scale; < 0 picks 1/diameter
    int min_replay = 256;   // warm-up transitions before updates start
    std::uint64_t seed = 1;
    bool verbose = false;
};

struct CurveRow {
    int episode = 0;
    double mean_reward = 0.0;
    double victims = 0.0;
};

struct DdqnResult {
    QNet online;
    ActionSet actions;
    double alpha = 0.0;
    std::vector<CurveRow> curve;
};

// Double-Q learning against the rollout engine: the online net picks the
// masked argmax at the next state, the target net evaluates it. Robots
// decide jointly at boundaries where both are idle; a transition commits
// when the chosen moves have completed.
DdqnResult ddqn_train(const RegionGraph& graph, const EngineModels& models,
                      const SimConfig& sim, const DdqnConfig& cfg);

// Greedy (epsilon = 0) policy over the trained net.
std::unique_ptr<RobotPolicy> make_ddqn_policy(const QNet& net,
                                              const ActionSet& actions);

std::string ddqn_to_json(const DdqnResult& r);
DdqnResult ddqn_from_json(const std::string& text);
std::string curve_csv(const std::vector<CurveRow>& curve);

} // namespace desim
