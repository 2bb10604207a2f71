#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bandit/policy.hpp"
#include "bandit/types.hpp"

namespace bandit {

// Per-arm Gaussian sampling distribution used by Thompson selection. The
// scale shrinks as observations accumulate.
struct GaussianPosterior {
    long observation_count = 0;
    double mean_estimate = 0.0;
    double sampling_scale = 1.0;
};

// Backlog of accumulated constraint excess; penalizes costly arms in
// proportion to backlog / penalty_weight.
struct VirtualQueue {
    double backlog = 0.0;
    double penalty_weight = 1.0;
};

/// Reward-index argmax; unplayed arms first (lowest index among them).
int ucb1_select(const std::vector<ArmStats>& stats, long t);

/// Draws one sample per arm and returns the argmax. Updates nothing.
int thompson_select(const std::vector<GaussianPosterior>& posteriors, std::mt19937_64& rng);

/// With probability epsilon a uniform arm, otherwise the best empirical
/// reward mean (unplayed arms count as mean zero).
int epsilon_greedy_select(const std::vector<ArmStats>& stats, double epsilon,
                          std::mt19937_64& rng);

/// Argmax of UCB_r(a) - (backlog / penalty_weight) * mean_cost(a); unplayed
/// arms first.
int virtual_queue_select(const std::vector<ArmStats>& stats, const VirtualQueue& queue,
                         double threshold, long t);

/// backlog <- max(0, backlog + cost - threshold).
void virtual_queue_update(VirtualQueue& queue, double cost, double threshold);

/// Materializes the sampling distributions for Thompson selection: played
/// arms get Normal(empirical mean, sigma0 / sqrt(N)), unplayed arms
/// Normal(0, sigma0) so they stay competitive.
std::vector<GaussianPosterior> make_posteriors(const std::vector<ArmStats>& stats,
                                               double sigma0);

class Ucb1Policy : public Policy {
public:
    explicit Ucb1Policy(int num_arms);

    PolicyDecision select(double threshold, long t) override;
    void update(int arm, double reward, double cost, double threshold) override;
    std::string name() const override { return "ucb1"; }

    const std::vector<ArmStats>& arm_stats() const { return stats_; }

private:
    std::vector<ArmStats> stats_;
};

class ThompsonPolicy : public Policy {
public:
    ThompsonPolicy(int num_arms, double sigma0, std::uint64_t engine_seed);

    PolicyDecision select(double threshold, long t) override;
    void update(int arm, double reward, double cost, double threshold) override;
    std::string name() const override { return "thompson"; }

private:
    std::vector<ArmStats> stats_;
    double sigma0_;
    std::mt19937_64 rng_;
};

class EpsilonGreedyPolicy : public Policy {
public:
    EpsilonGreedyPolicy(int num_arms, double epsilon, std::uint64_t engine_seed);

    PolicyDecision select(double threshold, long t) override;
    void update(int arm, double reward, double cost, double threshold) override;
    std::string name() const override { return "epsilon_greedy"; }

private:
    std::vector<ArmStats> stats_;
    double epsilon_;
    std::mt19937_64 rng_;
};

class VirtualQueuePolicy : public Policy {
public:
    VirtualQueuePolicy(int num_arms, double penalty_weight);

    PolicyDecision select(double threshold, long t) override;
    void update(int arm, double reward, double cost, double threshold) override;
    std::string name() const override { return "virtual_queue"; }

    const VirtualQueue& queue() const { return queue_; }

private:
    std::vector<ArmStats> stats_;
    VirtualQueue queue_;
};

}  // namespace bandit
