#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bandit {

// Which of the two feedback signals an index is computed over.
enum class Signal { Reward, Cost };

// How an action was chosen: unconstrained exploration, best arm within the
// feasible set, or least-cost fallback when no arm looks safe.
enum class Mode { Explore, SafeExplore, MinViolation };

std::string to_string(Mode mode);

struct PolicyDecision {
    int arm = 0;
    Mode mode = Mode::Explore;
};

// Per-arm play count and running feedback sums; means are derived on demand.
struct ArmStats {
    long play_count = 0;
    double reward_sum = 0.0;
    double cost_sum = 0.0;

    double mean(Signal which) const {
        return (which == Signal::Reward ? reward_sum : cost_sum) /
               static_cast<double>(play_count);
    }
};

// Linearly decaying per-round violation allowance: delta0 at t = 1, zero from
// t = budget_horizon + 1 onward.
struct BudgetSchedule {
    double delta0 = 0.5;
    long budget_horizon = 2000;
};

// Violation history over completed rounds.
struct ViolationLedger {
    long rounds_seen = 0;
    long violation_count = 0;
};

/// Upper confidence index for one arm; +infinity while the arm is unplayed.
inline double ucb_index(const ArmStats& stats, long t, Signal which) {
    if (stats.play_count == 0) {
        return std::numeric_limits<double>::infinity();
    }
    const double n = static_cast<double>(stats.play_count);
    return stats.mean(which) + std::sqrt(2.0 * std::log(static_cast<double>(t)) / n);
}

/// Permissible violation rate at round t, clamped at zero once exhausted.
inline double budget_at(const BudgetSchedule& schedule, long t) {
    const double fraction =
        static_cast<double>(t - 1) / static_cast<double>(schedule.budget_horizon);
    return std::max(0.0, schedule.delta0 * (1.0 - fraction));
}

/// Empirical violation rate over completed rounds; zero with no history.
inline double violation_rate(const ViolationLedger& ledger) {
    if (ledger.rounds_seen == 0) {
        return 0.0;
    }
    return static_cast<double>(ledger.violation_count) /
           static_cast<double>(ledger.rounds_seen);
}

/// Absorbs one round of feedback for the arm that was played. A violation is
/// counted only on strict excess: cost equal to the threshold is compliant.
inline void record_feedback(ArmStats& stats, ViolationLedger& ledger, double reward,
                            double cost, double threshold) {
    stats.play_count += 1;
    stats.reward_sum += reward;
    stats.cost_sum += cost;
    ledger.rounds_seen += 1;
    if (cost > threshold) {
        ledger.violation_count += 1;
    }
}

}  // namespace bandit
