#pragma once

#include <map>
#include <string>
#include <vector>

#include "bandit/policy.hpp"
#include "bandit/types.hpp"

namespace bandit {

// Cost estimate used by the over-budget branch, both for the feasibility
// filter and for the fallback argmin. Ucb is the optimistic index (mean plus
// exploration bonus); Mean is the raw empirical mean. The Ucb form is
// conservative but can lock onto a well-sampled high-cost arm: its shrunken
// bonus makes it the argmin even though cheap arms exist, and playing it
// shrinks the bonus further (see README).
enum class CostIndex { Ucb, Mean };

// Three-way action rule with a decaying violation budget.
//
// While the empirical violation rate is within budget, plays the arm with the
// highest reward index. Once over budget, restricts to the feasible set of
// arms whose cost estimate does not exceed the issued threshold and plays the
// best reward index among them; with no feasible arm it plays the arm with
// the lowest cost estimate. Ties always break toward the lowest arm index.
PolicyDecision select_action(const std::vector<ArmStats>& stats, long t, double threshold,
                             const BudgetSchedule& schedule, const ViolationLedger& ledger,
                             CostIndex cost_index = CostIndex::Ucb);

class BudgetedUcbPolicy : public Policy {
public:
    BudgetedUcbPolicy(int num_arms, BudgetSchedule schedule,
                      CostIndex cost_index = CostIndex::Ucb);

    PolicyDecision select(double threshold, long t) override;
    void update(int arm, double reward, double cost, double threshold) override;
    std::string name() const override { return "budgeted_ucb"; }

    const std::vector<ArmStats>& arm_stats() const { return stats_; }
    const ViolationLedger& ledger() const { return ledger_; }
    const BudgetSchedule& schedule() const { return schedule_; }

    /// Flat key-value snapshot of the full mutable state (per-arm counts and
    /// sums plus the ledger), for golden-file comparisons.
    std::map<std::string, double> snapshot() const;

private:
    std::vector<ArmStats> stats_;
    BudgetSchedule schedule_;
    ViolationLedger ledger_;
    CostIndex cost_index_;
};

}  // namespace bandit
