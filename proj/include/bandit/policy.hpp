#pragma once

#include <string>

#include "bandit/types.hpp"

namespace bandit {

// Common per-round protocol shared by every policy: observe the issued
// threshold, pick an arm, then absorb the (reward, cost) feedback for the arm
// actually played. One instance per run; never shared across runs.
class Policy {
public:
    virtual ~Policy() = default;

    virtual PolicyDecision select(double threshold, long t) = 0;
    virtual void update(int arm, double reward, double cost, double threshold) = 0;
    virtual std::string name() const = 0;
};

}  // namespace bandit
