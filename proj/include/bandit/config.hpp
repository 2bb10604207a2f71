#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandit/budgeted_ucb.hpp"
#include "bandit/wireless.hpp"

namespace bandit {

// Malformed or out-of-range configuration; the message names the offending
// key. The CLI maps it to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full experiment description. Defaults reproduce the reference wireless
// setup: T = 2000, K = 11 power levels on [0.1, 1.0] W, a 1 MHz link at 10 m
// with path-loss exponent 3 and noise density 1e-9 W/Hz, delta0 = 0.5,
// lambda = 1e6, five seeds.
struct ExperimentConfig {
    long horizon = 2000;
    int num_arms = 11;
    double delta0 = 0.5;
    long budget_horizon = 0;  // 0 = track the horizon
    ScheduleKind schedule = ScheduleKind::UniformRandom;
    double lambda = 1e6;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    std::vector<std::string> policies = {"budgeted_ucb", "ucb1", "thompson",
                                         "epsilon_greedy", "virtual_queue"};
    double bandwidth = 1e6;        // Hz
    double noise_density = 1e-9;   // W/Hz
    double distance = 10.0;        // m
    double pathloss_exponent = 3.0;
    double p_min = 0.1;            // W
    double p_max = 1.0;            // W
    double epsilon = 0.1;
    double sigma0 = 0.0;           // 0 = use the maximum achievable rate
    double queue_penalty_weight = 1.0;
    double reward_noise_std = 0.0;
    CostIndex constrained_cost_index = CostIndex::Ucb;
    std::vector<int> arm_counts = {5, 10, 15, 20, 25, 30};

    long resolved_budget_horizon() const {
        return budget_horizon > 0 ? budget_horizon : horizon;
    }
    WirelessLink link() const;
    PowerGrid grid() const;
    ConstraintSchedule constraint_schedule() const;
    double resolved_sigma0() const;
};

const std::vector<std::string>& known_policies();

/// Parses flat key-value text (one `key = value` per line, `#` comments).
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

/// Canonical key-value form; parse_config(serialize_config(c)) round-trips.
std::string serialize_config(const ExperimentConfig& config);

/// Throws ConfigError naming the first invalid field.
void validate_config(const ExperimentConfig& config);

std::string to_string(ScheduleKind kind);
ScheduleKind schedule_kind_from_string(const std::string& text);
std::string to_string(CostIndex index);
CostIndex cost_index_from_string(const std::string& text);

}  // namespace bandit
