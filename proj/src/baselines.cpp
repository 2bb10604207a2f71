#include "bandit/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace bandit {

int ucb1_select(const std::vector<ArmStats>& stats, long t) {
    if (stats.empty()) {
        throw std::invalid_argument("ucb1_select: arm list is empty");
    }
    int best = 0;
    double best_index = ucb_index(stats[0], t, Signal::Reward);
    for (int a = 1; a < static_cast<int>(stats.size()); ++a) {
        const double index = ucb_index(stats[a], t, Signal::Reward);
        if (index > best_index) {
            best = a;
            best_index = index;
        }
    }
    return best;
}

int thompson_select(const std::vector<GaussianPosterior>& posteriors, std::mt19937_64& rng) {
    if (posteriors.empty()) {
        throw std::invalid_argument("thompson_select: arm list is empty");
    }
    int best = 0;
    double best_sample = 0.0;
    for (int a = 0; a < static_cast<int>(posteriors.size()); ++a) {
        const auto& p = posteriors[static_cast<std::size_t>(a)];
        std::normal_distribution<double> dist(p.mean_estimate, p.sampling_scale);
        const double sample = dist(rng);
        if (a == 0 || sample > best_sample) {
            best = a;
            best_sample = sample;
        }
    }
    return best;
}

int epsilon_greedy_select(const std::vector<ArmStats>& stats, double epsilon,
                          std::mt19937_64& rng) {
    if (stats.empty()) {
        throw std::invalid_argument("epsilon_greedy_select: arm list is empty");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon_greedy_select: epsilon outside [0,1]");
    }
    const int num_arms = static_cast<int>(stats.size());
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (u < epsilon) {
        return std::uniform_int_distribution<int>(0, num_arms - 1)(rng);
    }
    int best = 0;
    double best_mean = stats[0].play_count > 0 ? stats[0].mean(Signal::Reward) : 0.0;
    for (int a = 1; a < num_arms; ++a) {
        const double mean =
            stats[static_cast<std::size_t>(a)].play_count > 0
                ? stats[static_cast<std::size_t>(a)].mean(Signal::Reward)
                : 0.0;
        if (mean > best_mean) {
            best = a;
            best_mean = mean;
        }
    }
    return best;
}

int virtual_queue_select(const std::vector<ArmStats>& stats, const VirtualQueue& queue,
                         double /*threshold*/, long t) {
    if (stats.empty()) {
        throw std::invalid_argument("virtual_queue_select: arm list is empty");
    }
    const int num_arms = static_cast<int>(stats.size());
    for (int a = 0; a < num_arms; ++a) {
        if (stats[static_cast<std::size_t>(a)].play_count == 0) {
            return a;
        }
    }
    const double pressure = queue.backlog / queue.penalty_weight;
    int best = 0;
    double best_index = 0.0;
    for (int a = 0; a < num_arms; ++a) {
        const auto& s = stats[static_cast<std::size_t>(a)];
        const double index =
            ucb_index(s, t, Signal::Reward) - pressure * s.mean(Signal::Cost);
        if (a == 0 || index > best_index) {
            best = a;
            best_index = index;
        }
    }
    return best;
}

void virtual_queue_update(VirtualQueue& queue, double cost, double threshold) {
    queue.backlog = std::max(0.0, queue.backlog + cost - threshold);
}

std::vector<GaussianPosterior> make_posteriors(const std::vector<ArmStats>& stats,
                                               double sigma0) {
    std::vector<GaussianPosterior> posteriors;
    posteriors.reserve(stats.size());
    for (const auto& s : stats) {
        GaussianPosterior p;
        p.observation_count = s.play_count;
        if (s.play_count > 0) {
            p.mean_estimate = s.mean(Signal::Reward);
            p.sampling_scale = sigma0 / std::sqrt(static_cast<double>(s.play_count));
        } else {
            p.mean_estimate = 0.0;
            p.sampling_scale = sigma0;
        }
        posteriors.push_back(p);
    }
    return posteriors;
}

Ucb1Policy::Ucb1Policy(int num_arms) : stats_(static_cast<std::size_t>(num_arms)) {
    if (num_arms < 1) {
        throw std::invalid_argument("Ucb1Policy: need at least one arm");
    }
}

PolicyDecision Ucb1Policy::select(double /*threshold*/, long t) {
    return {ucb1_select(stats_, t), Mode::Explore};
}

void Ucb1Policy::update(int arm, double reward, double cost, double /*threshold*/) {
    auto& s = stats_.at(static_cast<std::size_t>(arm));
    s.play_count += 1;
    s.reward_sum += reward;
    s.cost_sum += cost;
}

ThompsonPolicy::ThompsonPolicy(int num_arms, double sigma0, std::uint64_t engine_seed)
    : stats_(static_cast<std::size_t>(num_arms)), sigma0_(sigma0), rng_(engine_seed) {
    if (num_arms < 1) {
        throw std::invalid_argument("ThompsonPolicy: need at least one arm");
    }
    if (!(sigma0 > 0.0)) {
        throw std::invalid_argument("ThompsonPolicy: sigma0 must be positive");
    }
}

PolicyDecision ThompsonPolicy::select(double /*threshold*/, long /*t*/) {
    return {thompson_select(make_posteriors(stats_, sigma0_), rng_), Mode::Explore};
}

void ThompsonPolicy::update(int arm, double reward, double cost, double /*threshold*/) {
    auto& s = stats_.at(static_cast<std::size_t>(arm));
    s.play_count += 1;
    s.reward_sum += reward;
    s.cost_sum += cost;
}

EpsilonGreedyPolicy::EpsilonGreedyPolicy(int num_arms, double epsilon,
                                         std::uint64_t engine_seed)
    : stats_(static_cast<std::size_t>(num_arms)), epsilon_(epsilon), rng_(engine_seed) {
    if (num_arms < 1) {
        throw std::invalid_argument("EpsilonGreedyPolicy: need at least one arm");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("EpsilonGreedyPolicy: epsilon outside [0,1]");
    }
}

PolicyDecision EpsilonGreedyPolicy::select(double /*threshold*/, long /*t*/) {
    return {epsilon_greedy_select(stats_, epsilon_, rng_), Mode::Explore};
}

void EpsilonGreedyPolicy::update(int arm, double reward, double cost, double /*threshold*/) {
    auto& s = stats_.at(static_cast<std::size_t>(arm));
    s.play_count += 1;
    s.reward_sum += reward;
    s.cost_sum += cost;
}

VirtualQueuePolicy::VirtualQueuePolicy(int num_arms, double penalty_weight)
    : stats_(static_cast<std::size_t>(num_arms)) {
    if (num_arms < 1) {
        throw std::invalid_argument("VirtualQueuePolicy: need at least one arm");
    }
    if (!(penalty_weight > 0.0)) {
        throw std::invalid_argument("VirtualQueuePolicy: penalty weight must be positive");
    }
    queue_.penalty_weight = penalty_weight;
}

PolicyDecision VirtualQueuePolicy::select(double threshold, long t) {
    return {virtual_queue_select(stats_, queue_, threshold, t), Mode::Explore};
}

void VirtualQueuePolicy::update(int arm, double reward, double cost, double threshold) {
    auto& s = stats_.at(static_cast<std::size_t>(arm));
    s.play_count += 1;
    s.reward_sum += reward;
    s.cost_sum += cost;
    virtual_queue_update(queue_, cost, threshold);
}

}  // namespace bandit
