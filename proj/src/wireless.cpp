#include "bandit/wireless.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bandit {

double WirelessLink::gain() const {
    return std::pow(distance, -pathloss_exponent);
}

double throughput(const WirelessLink& link, double power) {
    if (!(power > 0.0)) {
        throw std::invalid_argument("throughput: power must be positive, got " +
                                    std::to_string(power));
    }
    const double snr = power * link.gain() / (link.noise_density * link.bandwidth);
    return link.bandwidth * std::log2(1.0 + snr);
}

std::vector<double> power_levels(const PowerGrid& grid) {
    if (grid.num_levels < 2) {
        throw std::invalid_argument("power_levels: num_levels must be at least 2");
    }
    if (!(grid.p_min > 0.0 && grid.p_min < grid.p_max)) {
        throw std::invalid_argument("power_levels: need 0 < p_min < p_max");
    }
    const double step = (grid.p_max - grid.p_min) / static_cast<double>(grid.num_levels - 1);
    std::vector<double> levels(static_cast<std::size_t>(grid.num_levels));
    for (int a = 0; a < grid.num_levels; ++a) {
        levels[static_cast<std::size_t>(a)] = grid.p_min + static_cast<double>(a) * step;
    }
    levels.front() = grid.p_min;
    levels.back() = grid.p_max;  // keep the endpoint exact under rounding
    return levels;
}

double threshold_at(const ConstraintSchedule& schedule, long t, std::mt19937_64& rng) {
    if (t < 1 || t > schedule.horizon) {
        throw std::out_of_range("threshold_at: round " + std::to_string(t) +
                                " outside [1, " + std::to_string(schedule.horizon) + "]");
    }
    if (schedule.kind == ScheduleKind::UniformRandom) {
        return std::uniform_real_distribution<double>(schedule.low, schedule.high)(rng);
    }
    // V-shaped ramp: high at t=1, low at t=ceil(T/2), high again at t=T.
    const long mid = (schedule.horizon + 1) / 2;
    const double span = schedule.high - schedule.low;
    double value;
    if (t <= mid) {
        value = mid == 1 ? schedule.high
                         : schedule.high - span * static_cast<double>(t - 1) /
                                               static_cast<double>(mid - 1);
    } else {
        value = schedule.low + span * static_cast<double>(t - mid) /
                                   static_cast<double>(schedule.horizon - mid);
    }
    return std::clamp(value, schedule.low, schedule.high);
}

WirelessEnvironment::WirelessEnvironment(WirelessLink link, PowerGrid grid,
                                         double reward_noise_std)
    : link_(link), reward_noise_std_(reward_noise_std) {
    if (!(link.bandwidth > 0.0 && link.noise_density > 0.0 && link.distance > 0.0 &&
          link.pathloss_exponent > 0.0)) {
        throw std::invalid_argument("WirelessEnvironment: link parameters must be positive");
    }
    if (reward_noise_std < 0.0) {
        throw std::invalid_argument("WirelessEnvironment: reward noise std must be >= 0");
    }
    levels_ = power_levels(grid);
    rates_.reserve(levels_.size());
    for (double level : levels_) {
        rates_.push_back(throughput(link_, level));
    }
    // Both signals must be strictly increasing in the arm index; the
    // constrained optimum being the top feasible level depends on it.
    for (std::size_t a = 1; a < levels_.size(); ++a) {
        if (!(levels_[a] > levels_[a - 1] && rates_[a] > rates_[a - 1])) {
            throw std::logic_error("WirelessEnvironment: levels and rates must be "
                                   "strictly increasing in the arm index");
        }
    }
}

Feedback WirelessEnvironment::step(int arm, std::mt19937_64& rng) const {
    if (arm < 0 || arm >= num_arms()) {
        throw std::out_of_range("WirelessEnvironment::step: arm " + std::to_string(arm) +
                                " outside [0, " + std::to_string(num_arms() - 1) + "]");
    }
    double reward = rates_[static_cast<std::size_t>(arm)];
    if (reward_noise_std_ > 0.0) {
        reward += std::normal_distribution<double>(0.0, reward_noise_std_)(rng);
    }
    return {reward, levels_[static_cast<std::size_t>(arm)]};
}

}  // namespace bandit
