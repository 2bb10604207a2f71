#include "bandit/budgeted_ucb.hpp"

#include <limits>
#include <stdexcept>

namespace bandit {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Explore: return "explore";
        case Mode::SafeExplore: return "safe_explore";
        case Mode::MinViolation: return "min_violation";
    }
    return "explore";
}

PolicyDecision select_action(const std::vector<ArmStats>& stats, long t, double threshold,
                             const BudgetSchedule& schedule, const ViolationLedger& ledger,
                             CostIndex cost_index) {
    if (stats.empty()) {
        throw std::invalid_argument("select_action: arm list is empty");
    }
    const int num_arms = static_cast<int>(stats.size());

    if (violation_rate(ledger) <= budget_at(schedule, t)) {
        int best = 0;
        double best_index = ucb_index(stats[0], t, Signal::Reward);
        for (int a = 1; a < num_arms; ++a) {
            const double index = ucb_index(stats[a], t, Signal::Reward);
            if (index > best_index) {
                best = a;
                best_index = index;
            }
        }
        return {best, Mode::Explore};
    }

    const auto cost_estimate = [&](int a) {
        const ArmStats& s = stats[static_cast<std::size_t>(a)];
        if (cost_index == CostIndex::Ucb) return ucb_index(s, t, Signal::Cost);
        return s.play_count > 0 ? s.mean(Signal::Cost)
                                : std::numeric_limits<double>::infinity();
    };

    // Over budget: restrict to arms whose cost estimate clears the issued
    // threshold, tracking the overall cost argmin as the fallback.
    int best_feasible = -1;
    double best_feasible_index = 0.0;
    int safest = 0;
    double safest_cost = cost_estimate(0);
    for (int a = 0; a < num_arms; ++a) {
        const double cost = cost_estimate(a);
        if (a > 0 && cost < safest_cost) {
            safest = a;
            safest_cost = cost;
        }
        if (cost <= threshold) {
            const double reward_index = ucb_index(stats[a], t, Signal::Reward);
            if (best_feasible < 0 || reward_index > best_feasible_index) {
                best_feasible = a;
                best_feasible_index = reward_index;
            }
        }
    }
    if (best_feasible >= 0) {
        return {best_feasible, Mode::SafeExplore};
    }
    return {safest, Mode::MinViolation};
}

BudgetedUcbPolicy::BudgetedUcbPolicy(int num_arms, BudgetSchedule schedule,
                                     CostIndex cost_index)
    : stats_(static_cast<std::size_t>(num_arms)), schedule_(schedule),
      cost_index_(cost_index) {
    if (num_arms < 1) {
        throw std::invalid_argument("BudgetedUcbPolicy: need at least one arm");
    }
}

PolicyDecision BudgetedUcbPolicy::select(double threshold, long t) {
    return select_action(stats_, t, threshold, schedule_, ledger_, cost_index_);
}

void BudgetedUcbPolicy::update(int arm, double reward, double cost, double threshold) {
    if (arm < 0 || arm >= static_cast<int>(stats_.size())) {
        throw std::out_of_range("BudgetedUcbPolicy::update: arm out of range");
    }
    record_feedback(stats_[static_cast<std::size_t>(arm)], ledger_, reward, cost, threshold);
}

std::map<std::string, double> BudgetedUcbPolicy::snapshot() const {
    std::map<std::string, double> snap;
    for (std::size_t a = 0; a < stats_.size(); ++a) {
        const std::string prefix = "arm" + std::to_string(a) + ".";
        snap[prefix + "plays"] = static_cast<double>(stats_[a].play_count);
        snap[prefix + "reward_sum"] = stats_[a].reward_sum;
        snap[prefix + "cost_sum"] = stats_[a].cost_sum;
    }
    snap["ledger.rounds"] = static_cast<double>(ledger_.rounds_seen);
    snap["ledger.violations"] = static_cast<double>(ledger_.violation_count);
    return snap;
}

}  // namespace bandit
