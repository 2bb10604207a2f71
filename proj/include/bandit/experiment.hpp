#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bandit/config.hpp"
#include "bandit/metrics.hpp"
#include "bandit/policy.hpp"

namespace bandit {

inline constexpr const char* kVersion = "0.1.0";

// Everything one experiment produces: per-(policy, seed) traces, per-run
// curves, and per-policy aggregates across seeds. Policies that failed
// mid-run are listed in failures and excluded from aggregates.
struct RunArtifact {
    ExperimentConfig config;
    std::string version;
    std::map<std::string, std::vector<std::vector<RoundRecord>>> traces;
    std::map<std::string, std::vector<MetricCurves>> curves;
    std::map<std::string, AggregateCurves> aggregates;
    std::vector<std::string> failures;
};

// Mean final overall objective per (policy, K) under the linear schedule.
struct ScalabilityResult {
    ExperimentConfig config;
    std::string version;
    std::vector<int> arm_counts;
    std::map<std::string, std::vector<double>> mean_final_objective;
};

/// The full threshold sequence for one seed. Every policy sharing the seed
/// consumes this exact sequence, so cross-policy comparisons are paired.
std::vector<double> make_thresholds(const ConstraintSchedule& schedule, std::uint64_t seed);

std::unique_ptr<Policy> make_policy(const std::string& name, const ExperimentConfig& config,
                                    std::uint64_t seed);

/// One (policy, seed) run of the round protocol: observe threshold, select,
/// step, feed back, log.
std::vector<RoundRecord> run_single(const ExperimentConfig& config,
                                    const std::string& policy_name, std::uint64_t seed,
                                    const std::vector<double>& thresholds);

RunArtifact run_experiment(const ExperimentConfig& config);

/// Reruns the linear-schedule experiment for each arm count.
ScalabilityResult run_scalability(const ExperimentConfig& config,
                                  const std::vector<int>& arm_counts);

}  // namespace bandit
