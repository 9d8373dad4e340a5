#include "desim/ddqn.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "desim/common.hpp"
#include "desim/csv.hpp"
#include "desim/math.hpp"
#include "nlohmann/json.hpp"

namespace desim {

Eigen::VectorXd QNet::forward(const Eigen::VectorXd& x) const {
    if (x.size() != W1().cols()) fail("qnet: input width mismatch");
    const Eigen::VectorXd h =
        (W1() * x + b1().col(0)).cwiseMax(0.0);
    return W2() * h + b2().col(0);
}

QNet init_qnet(int in, int hidden, int out, std::uint64_t seed) {
    Rng rng(seed);
    auto glorot = [&](int rows, int cols) {
        const double lim = std::sqrt(6.0 / double(rows + cols));
        Eigen::MatrixXd m(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) m(r, c) = rng.uniform(-lim, lim);
        return m;
    };
    QNet net;
    net.t.push_back(glorot(hidden, in));
    net.t.push_back(Eigen::MatrixXd::Zero(hidden, 1));
    net.t.push_back(glorot(out, hidden));
    net.t.push_back(Eigen::MatrixXd::Zero(out, 1));
    return net;
}

double qnet_loss_and_grads(const QNet& net, const std::vector<QSample>& batch,
                           std::vector<Eigen::MatrixXd>* grads) {
    if (batch.empty()) fail("qnet: empty batch");
    if (grads) {
        grads->clear();
        for (const auto& m : net.t)
            grads->push_back(Eigen::MatrixXd::Zero(m.rows(), m.cols()));
    }
    const double inv_n = 1.0 / double(batch.size());
    double loss = 0.0;
    for (const QSample& s : batch) {
        const Eigen::VectorXd pre = net.W1() * s.x + net.b1().col(0);
        const Eigen::VectorXd h = pre.cwiseMax(0.0);
        const Eigen::VectorXd q = net.W2() * h + net.b2().col(0);
        const double err = q[s.action] - s.y;
        loss += err * err * inv_n;
        if (!grads) continue;
        const double dq = 2.0 * err * inv_n;
        (*grads)[2].row(s.action) += dq * h.transpose();
        (*grads)[3](s.action, 0) += dq;
        Eigen::VectorXd dh = dq * net.W2().row(s.action).transpose();
        for (int i = 0; i < dh.size(); ++i)
            if (pre[i] <= 0.0) dh[i] = 0.0;
        (*grads)[0] += dh * s.x.transpose();
        (*grads)[1].col(0) += dh;
    }
    return loss;
}

ReplayBuffer::ReplayBuffer(std::size_t capacity) {
    if (capacity == 0) fail("replay buffer: zero capacity");
    buf_.resize(capacity);
}

void ReplayBuffer::push(Transition tr) {
    buf_[next_] = std::move(tr);
    ++next_;
    if (next_ == buf_.size()) {
        next_ = 0;
        full_ = true;
    }
}

std::vector<std::size_t> ReplayBuffer::sample(std::size_t k, Rng& rng) const {
    const std::size_t n = size();
    if (k > n) fail("replay buffer: batch ", k, " exceeds size ", n);
    return rng.pick_k_of_n(n, k);
}

namespace {

struct Adam {
    std::vector<Eigen::MatrixXd> m, v;
    double lr, b1 = 0.9, b2 = 0.999, eps = 1e-8;
    long long step_n = 0;

    Adam(const QNet& net, double lr_in) : lr(lr_in) {
        for (const auto& t : net.t) {
            m.push_back(Eigen::MatrixXd::Zero(t.rows(), t.cols()));
            v.push_back(Eigen::MatrixXd::Zero(t.rows(), t.cols()));
        }
    }

    void step(QNet& net, const std::vector<Eigen::MatrixXd>& g) {
        ++step_n;
        const double c1 = 1.0 - std::pow(b1, double(step_n));
        const double c2 = 1.0 - std::pow(b2, double(step_n));
        for (std::size_t i = 0; i < net.t.size(); ++i) {
            m[i] = b1 * m[i] + (1.0 - b1) * g[i];
            v[i] = b2 * v[i] + (1.0 - b2) * g[i].cwiseProduct(g[i]);
            const Eigen::ArrayXXd mh = m[i].array() / c1;
            const Eigen::ArrayXXd vh = v[i].array() / c2;
            net.t[i].array() -= lr * mh / (vh.sqrt() + eps);
        }
    }
};

struct Trainer {
    const DdqnConfig* cfg;
    ActionSet actions;
    QNet online, target;
    Adam opt;
    ReplayBuffer replay;
    Rng rng; // replay sampling
    double alpha;
    long long grad_steps = 0;
    long long commits = 0;
    std::vector<double> ep_rewards;

    Trainer(const DdqnConfig& c, int obs_width, ActionSet a, double alpha_in)
        : cfg(&c),
          actions(a),
          online(init_qnet(obs_width, c.hidden, a.joint_count(),
                           derive_seed(c.seed, "init"))),
          target(online),
          opt(online, c.lr),
          replay(static_cast<std::size_t>(c.replay_capacity)),
          rng(derive_seed(c.seed, "replay")),
          alpha(alpha_in) {}

    void commit(Transition tr) {
        ep_rewards.push_back(tr.reward);
        replay.push(std::move(tr));
        ++commits;
        learn();
    }

    void learn() {
        const std::size_t need = std::max<std::size_t>(
            static_cast<std::size_t>(cfg->batch),
            static_cast<std::size_t>(cfg->min_replay));
        if (replay.size() < need) return;

        std::vector<QSample> batch;
        batch.reserve(cfg->batch);
        for (std::size_t idx :
             replay.sample(static_cast<std::size_t>(cfg->batch), rng)) {
            const Transition& tr = replay.at(idx);
            QSample s;
            s.x = tr.obs;
            s.action = tr.action;
            double y = tr.reward;
            if (!tr.terminal) {
                const int a_star = masked_argmax(online.forward(tr.next_obs),
                                                 tr.next_mask);
                y += cfg->gamma * target.forward(tr.next_obs)[a_star];
            }
            s.y = y;
            batch.push_back(std::move(s));
        }

        std::vector<Eigen::MatrixXd> grads;
        const double loss = qnet_loss_and_grads(online, batch, &grads);
        if (!std::isfinite(loss))
            fail("q-learning diverged: non-finite loss at gradient step ",
                 grad_steps, " after ", commits, " transitions");
        opt.step(online, grads);
        ++grad_steps;
        if (grad_steps % cfg->target_sync == 0) target = online;
    }
};

// Applies a joint slot pair as robot destinations.
void apply_joint(World& w, const ActionSet& actions, int joint) {
    const auto [s0, s1] = actions.split(joint);
    std::vector<std::size_t> dest;
    std::vector<char> mask;
    actions.robot_slots(w, 0, dest, mask);
    w.set_robot_dest(0, dest[s0]);
    actions.robot_slots(w, 1, dest, mask);
    w.set_robot_dest(1, dest[s1]);
}

class TrainPolicy : public RobotPolicy {
public:
    TrainPolicy(Trainer* tr, double eps) : tr_(tr), eps_(eps) {}

    void decide(World& w, Rng& rng) override {
        if (!w.all_robots_idle()) return;
        const Eigen::VectorXd obs = obs_vector(w, tr_->actions);
        const std::vector<char> mask = joint_mask(w, tr_->actions);
        if (pending_) {
            Transition tr;
            tr.obs = pend_obs_;
            tr.action = pend_action_;
            tr.reward = pursuit_reward(w, tr_->alpha);
            tr.next_obs = obs;
            tr.next_mask = mask;
            tr.terminal = false;
            tr_->commit(std::move(tr));
            pending_ = false;
        }
        int a;
        if (rng.uniform01() < eps_) {
            std::vector<int> valid;
            for (std::size_t i = 0; i < mask.size(); ++i)
                if (mask[i]) valid.push_back(static_cast<int>(i));
            a = valid[rng.uniform_int(valid.size())];
        } else {
            a = masked_argmax(tr_->online.forward(obs), mask);
        }
        apply_joint(w, tr_->actions, a);
        pend_obs_ = obs;
        pend_action_ = a;
        pending_ = true;
    }

    void episode_end(World& w, Rng&) override {
        if (!pending_) return;
        Transition tr;
        tr.obs = pend_obs_;
        tr.action = pend_action_;
        tr.reward = pursuit_reward(w, tr_->alpha);
        tr.next_obs = obs_vector(w, tr_->actions);
        tr.next_mask = joint_mask(w, tr_->actions);
        tr.terminal = true;
        tr_->commit(std::move(tr));
        pending_ = false;
    }

private:
    Trainer* tr_;
    double eps_;
    bool pending_ = false;
    Eigen::VectorXd pend_obs_;
    int pend_action_ = 0;
};

class GreedyPolicy : public RobotPolicy {
public:
    GreedyPolicy(QNet net, ActionSet actions)
        : net_(std::move(net)), actions_(actions) {}

    void decide(World& w, Rng&) override {
        if (!w.all_robots_idle()) return;
        const Eigen::VectorXd obs = obs_vector(w, actions_);
        const int a = masked_argmax(net_.forward(obs), joint_mask(w, actions_));
        apply_joint(w, actions_, a);
    }

private:
    QNet net_;
    ActionSet actions_;
};

} // namespace

DdqnResult ddqn_train(const RegionGraph& graph, const EngineModels& models,
                      const SimConfig& sim, const DdqnConfig& cfg) {
    if (sim.robot_count != 2)
        fail("q-learning drives exactly two robots, got ", sim.robot_count);
    const ActionSet actions = ActionSet::for_graph(graph);
    const double alpha =
        cfg.alpha > 0 ? cfg.alpha : 1.0 / std::max(1, graph.diameter());

    Trainer tr(cfg, 2 * actions.slots, actions, alpha);

    DdqnResult res;
    res.actions = actions;
    res.alpha = alpha;
    for (int e = 0; e < cfg.episodes; ++e) {
        const double frac =
            cfg.eps_decay_episodes > 0
                ? std::min(1.0, double(e) / double(cfg.eps_decay_episodes))
                : 1.0;
        const double eps =
            cfg.eps_start + (cfg.eps_end - cfg.eps_start) * frac;

        tr.ep_rewards.clear();
        TrainPolicy policy(&tr, eps);
        const RolloutLog log =
            run_episode(graph, models, sim, &policy,
                        derive_seed(cfg.seed, "episode", e), e);

        CurveRow row;
        row.episode = e;
        row.mean_reward =
            tr.ep_rewards.empty() ? 0.0 : mean(tr.ep_rewards);
        row.victims = log.summary.victims;
        res.curve.push_back(row);
        if (cfg.verbose && (e + 1) % 500 == 0)
            std::cerr << "episode " << (e + 1) << " eps " << eps
                      << " mean reward " << row.mean_reward << "\n";
    }
    res.online = std::move(tr.online);
    return res;
}

std::unique_ptr<RobotPolicy> make_ddqn_policy(const QNet& net,
                                              const ActionSet& actions) {
    return std::make_unique<GreedyPolicy>(net, actions);
}

std::string ddqn_to_json(const DdqnResult& r) {
    nlohmann::json j;
    j["format"] = "ddqn-v1";
    j["slots"] = r.actions.slots;
    j["alpha"] = r.alpha;
    nlohmann::json tensors = nlohmann::json::array();
    const char* names[] = {"W1", "b1", "W2", "b2"};
    for (std::size_t i = 0; i < r.online.t.size(); ++i) {
        const Eigen::MatrixXd& m = r.online.t[i];
        std::vector<double> data(m.data(), m.data() + m.size());
        tensors.push_back({{"name", names[i]},
                           {"rows", m.rows()},
                           {"cols", m.cols()},
                           {"data", data}});
    }
    j["tensors"] = std::move(tensors);
    return j.dump() + "\n";
}

DdqnResult ddqn_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != "ddqn-v1")
        fail("unexpected policy format tag '", j.value("format", ""), "'");
    DdqnResult r;
    r.actions.slots = j.at("slots").get<int>();
    r.alpha = j.at("alpha").get<double>();
    for (const auto& t : j.at("tensors")) {
        const auto rows = t.at("rows").get<Eigen::Index>();
        const auto cols = t.at("cols").get<Eigen::Index>();
        const auto data = t.at("data").get<std::vector<double>>();
        if (static_cast<Eigen::Index>(data.size()) != rows * cols)
            fail("policy tensor size mismatch");
        Eigen::MatrixXd m(rows, cols);
        std::copy(data.begin(), data.end(), m.data());
        r.online.t.push_back(std::move(m));
    }
    if (r.online.t.size() != 4) fail("policy artifact needs four tensors");
    return r;
}

std::string curve_csv(const std::vector<CurveRow>& curve) {
    std::ostringstream out;
    out << "episode,mean_reward,victims\n";
    for (const CurveRow& r : curve)
        out << r.episode << ',' << fmt_g(r.mean_reward) << ','
            << fmt_g(r.victims) << '\n';
    return out.str();
}

} // namespace desim
