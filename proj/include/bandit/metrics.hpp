#pragma once

#include <vector>

#include "bandit/wireless.hpp"

namespace bandit {

// Per-round best feasible arm and its rate, computed with full knowledge of
// the deterministic arm means.
struct ClairvoyantOptimum {
    std::vector<int> optimal_arm;
    std::vector<double> optimal_reward;
};

// The three evaluation curves, indexed by round:
//   cumulative_violations[t-1] = sum_{s<=t} 1{c_s > C_s}
//   overall_objective[t-1]    = sum_{s<=t} r_s - lambda * violations
//   absolute_regret[t-1]      = | sum_{s<=t} (mu*_s - r_s) |
// final_violation_rate is violations(T) / T.
struct MetricCurves {
    std::vector<double> cumulative_violations;
    std::vector<double> overall_objective;
    std::vector<double> absolute_regret;
    double final_violation_rate = 0.0;
};

// Pointwise mean and sample standard deviation across runs.
struct AggregateCurves {
    MetricCurves mean;
    MetricCurves stddev;
};

// Least-squares comparison of V(t) against a linear and a logarithmic growth
// model on the post-budget region, plus the horizon-halving sublinearity
// check used when no post-budget region exists.
struct GrowthFit {
    bool has_fit_region = false;
    double linear_sse = 0.0;
    double log_sse = 0.0;
    bool log_model_wins = false;  // meaningful only when has_fit_region
    bool sublinear = false;       // V(T) - V(T/2) < V(T/2)
};

/// Brute-force scan per round: among arms with level <= C_t the one with the
/// highest rate; with no feasible arm, the lowest-cost arm.
ClairvoyantOptimum clairvoyant(const PowerGrid& grid, const WirelessLink& link,
                               const std::vector<double>& thresholds);

MetricCurves compute_curves(const std::vector<RoundRecord>& trace,
                            const ClairvoyantOptimum& oracle, double lambda);

AggregateCurves aggregate(const std::vector<MetricCurves>& runs);

GrowthFit log_growth_check(const std::vector<double>& cumulative_violations,
                           long budget_horizon);

}  // namespace bandit
