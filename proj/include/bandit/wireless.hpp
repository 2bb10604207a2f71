#pragma once

#include <random>
#include <vector>

#include "bandit/types.hpp"

namespace bandit {

// Narrowband link with distance-power-law attenuation.
struct WirelessLink {
    double bandwidth = 1e6;        // Hz
    double noise_density = 1e-9;   // W/Hz
    double distance = 10.0;        // m
    double pathloss_exponent = 3.0;

    double gain() const;  // d^(-alpha)
};

// Evenly spaced transmit power action set; arm a maps to level(a).
struct PowerGrid {
    double p_min = 0.1;  // W
    double p_max = 1.0;  // W
    int num_levels = 11;
};

enum class ScheduleKind { UniformRandom, LinearVShape };

// Per-round energy cap emitted by the environment. UniformRandom draws each
// threshold independently from [low, high]; LinearVShape ramps from high down
// to low at round ceil(T/2) and back up to high at round T.
struct ConstraintSchedule {
    ScheduleKind kind = ScheduleKind::UniformRandom;
    double low = 0.1;    // W
    double high = 1.0;   // W
    long horizon = 2000;
};

// Full per-round trace entry. budget and empirical_rate are the
// decision-time values (empirical_rate counts completed rounds only).
struct RoundRecord {
    long t = 0;
    double threshold = 0.0;
    int arm = 0;
    double reward = 0.0;
    double cost = 0.0;
    bool violated = false;
    Mode mode = Mode::Explore;
    double budget = 0.0;
    double empirical_rate = 0.0;
};

/// Shannon rate B * log2(1 + P * g / (N0 * B)) in bits/s; strictly
/// increasing in power. Throws on non-positive power.
double throughput(const WirelessLink& link, double power);

/// The K evenly spaced power levels; both endpoints exact.
std::vector<double> power_levels(const PowerGrid& grid);

/// Threshold for round t (1-based). Consumes the stream only for the
/// UniformRandom kind.
double threshold_at(const ConstraintSchedule& schedule, long t, std::mt19937_64& rng);

struct Feedback {
    double reward = 0.0;  // bits/s
    double cost = 0.0;    // W
};

// Deterministic transmitter simulation: reward is the Shannon rate of the
// chosen power level, cost is the level itself. Optional additive Gaussian
// reward noise (off by default) exercises the stochastic-feedback model.
class WirelessEnvironment {
public:
    WirelessEnvironment(WirelessLink link, PowerGrid grid, double reward_noise_std = 0.0);

    Feedback step(int arm, std::mt19937_64& rng) const;

    int num_arms() const { return static_cast<int>(levels_.size()); }
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& rates() const { return rates_; }
    const WirelessLink& link() const { return link_; }

private:
    WirelessLink link_;
    double reward_noise_std_;
    std::vector<double> levels_;
    std::vector<double> rates_;
};

}  // namespace bandit
