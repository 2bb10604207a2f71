#include "bandit/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bandit/csv.hpp"

namespace bandit {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::stringstream stream(value);
    std::string part;
    while (std::getline(stream, part, ',')) {
        part = trim(part);
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

double parse_double(const std::string& key, const std::string& value) {
    double out{};
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), last, out);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    }
    return out;
}

long parse_long(const std::string& key, const std::string& value) {
    long out{};
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), last, out);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out{};
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), last, out);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError("key '" + key + "': expected a non-negative integer, got '" +
                          value + "'");
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        if constexpr (std::is_same_v<T, std::string>) {
            out += values[i];
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

}  // namespace

WirelessLink ExperimentConfig::link() const {
    return {bandwidth, noise_density, distance, pathloss_exponent};
}

PowerGrid ExperimentConfig::grid() const {
    return {p_min, p_max, num_arms};
}

ConstraintSchedule ExperimentConfig::constraint_schedule() const {
    return {schedule, p_min, p_max, horizon};
}

double ExperimentConfig::resolved_sigma0() const {
    return sigma0 > 0.0 ? sigma0 : throughput(link(), p_max);
}

const std::vector<std::string>& known_policies() {
    static const std::vector<std::string> names = {"budgeted_ucb", "ucb1", "thompson",
                                                   "epsilon_greedy", "virtual_queue"};
    return names;
}

std::string to_string(ScheduleKind kind) {
    return kind == ScheduleKind::UniformRandom ? "random" : "linear";
}

ScheduleKind schedule_kind_from_string(const std::string& text) {
    if (text == "random") return ScheduleKind::UniformRandom;
    if (text == "linear") return ScheduleKind::LinearVShape;
    throw ConfigError("key 'schedule': expected 'random' or 'linear', got '" + text + "'");
}

std::string to_string(CostIndex index) {
    return index == CostIndex::Ucb ? "ucb" : "mean";
}

CostIndex cost_index_from_string(const std::string& text) {
    if (text == "ucb") return CostIndex::Ucb;
    if (text == "mean") return CostIndex::Mean;
    throw ConfigError("key 'constrained_cost_index': expected 'ucb' or 'mean', got '" +
                      text + "'");
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config;
    std::stringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_number) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_number) + ": empty key");
        }

        if (key == "horizon") {
            config.horizon = parse_long(key, value);
        } else if (key == "num_arms") {
            config.num_arms = static_cast<int>(parse_long(key, value));
        } else if (key == "delta0") {
            config.delta0 = parse_double(key, value);
        } else if (key == "budget_horizon") {
            config.budget_horizon = parse_long(key, value);
        } else if (key == "schedule") {
            config.schedule = schedule_kind_from_string(value);
        } else if (key == "lambda") {
            config.lambda = parse_double(key, value);
        } else if (key == "seeds") {
            config.seeds.clear();
            for (const std::string& part : split_list(value)) {
                config.seeds.push_back(parse_u64(key, part));
            }
        } else if (key == "policies") {
            config.policies = split_list(value);
        } else if (key == "bandwidth") {
            config.bandwidth = parse_double(key, value);
        } else if (key == "noise_density") {
            config.noise_density = parse_double(key, value);
        } else if (key == "distance") {
            config.distance = parse_double(key, value);
        } else if (key == "pathloss_exponent") {
            config.pathloss_exponent = parse_double(key, value);
        } else if (key == "p_min") {
            config.p_min = parse_double(key, value);
        } else if (key == "p_max") {
            config.p_max = parse_double(key, value);
        } else if (key == "epsilon") {
            config.epsilon = parse_double(key, value);
        } else if (key == "sigma0") {
            config.sigma0 = parse_double(key, value);
        } else if (key == "queue_penalty_weight") {
            config.queue_penalty_weight = parse_double(key, value);
        } else if (key == "reward_noise_std") {
            config.reward_noise_std = parse_double(key, value);
        } else if (key == "constrained_cost_index") {
            config.constrained_cost_index = cost_index_from_string(value);
        } else if (key == "arm_counts") {
            config.arm_counts.clear();
            for (const std::string& part : split_list(value)) {
                config.arm_counts.push_back(static_cast<int>(parse_long(key, part)));
            }
        } else {
            throw ConfigError("unknown key '" + key + "' on line " +
                              std::to_string(line_number));
        }
    }
    return config;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ExperimentConfig& config) {
    std::string out;
    out += "horizon = " + std::to_string(config.horizon) + "\n";
    out += "num_arms = " + std::to_string(config.num_arms) + "\n";
    out += "delta0 = " + format_double(config.delta0) + "\n";
    out += "budget_horizon = " + std::to_string(config.budget_horizon) + "\n";
    out += "schedule = " + to_string(config.schedule) + "\n";
    out += "lambda = " + format_double(config.lambda) + "\n";
    out += "seeds = " + join(config.seeds) + "\n";
    out += "policies = " + join(config.policies) + "\n";
    out += "bandwidth = " + format_double(config.bandwidth) + "\n";
    out += "noise_density = " + format_double(config.noise_density) + "\n";
    out += "distance = " + format_double(config.distance) + "\n";
    out += "pathloss_exponent = " + format_double(config.pathloss_exponent) + "\n";
    out += "p_min = " + format_double(config.p_min) + "\n";
    out += "p_max = " + format_double(config.p_max) + "\n";
    out += "epsilon = " + format_double(config.epsilon) + "\n";
    out += "sigma0 = " + format_double(config.sigma0) + "\n";
    out += "queue_penalty_weight = " + format_double(config.queue_penalty_weight) + "\n";
    out += "reward_noise_std = " + format_double(config.reward_noise_std) + "\n";
    out += "constrained_cost_index = " + to_string(config.constrained_cost_index) + "\n";
    out += "arm_counts = " + join(config.arm_counts) + "\n";
    return out;
}

void validate_config(const ExperimentConfig& config) {
    if (config.horizon < 1) {
        throw ConfigError("key 'horizon': must be at least 1");
    }
    if (config.num_arms < 2) {
        throw ConfigError("key 'num_arms': must be at least 2");
    }
    if (!(config.delta0 >= 0.0 && config.delta0 <= 1.0)) {
        throw ConfigError("key 'delta0': must lie in [0, 1]");
    }
    if (config.budget_horizon < 0) {
        throw ConfigError("key 'budget_horizon': must be >= 0 (0 tracks the horizon)");
    }
    if (!(config.lambda >= 0.0)) {
        throw ConfigError("key 'lambda': must be >= 0");
    }
    if (config.seeds.empty()) {
        throw ConfigError("key 'seeds': need at least one seed");
    }
    for (const std::string& name : config.policies) {
        const auto& known = known_policies();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw ConfigError("key 'policies': unknown policy '" + name + "'");
        }
        if (std::count(config.policies.begin(), config.policies.end(), name) > 1) {
            throw ConfigError("key 'policies': policy '" + name + "' listed twice");
        }
    }
    if (!(config.bandwidth > 0.0)) {
        throw ConfigError("key 'bandwidth': must be positive");
    }
    if (!(config.noise_density > 0.0)) {
        throw ConfigError("key 'noise_density': must be positive");
    }
    if (!(config.distance > 0.0)) {
        throw ConfigError("key 'distance': must be positive");
    }
    if (!(config.pathloss_exponent > 0.0)) {
        throw ConfigError("key 'pathloss_exponent': must be positive");
    }
    if (!(config.p_min > 0.0 && config.p_min < config.p_max)) {
        throw ConfigError("keys 'p_min'/'p_max': need 0 < p_min < p_max");
    }
    if (!(config.epsilon >= 0.0 && config.epsilon <= 1.0)) {
        throw ConfigError("key 'epsilon': must lie in [0, 1]");
    }
    if (!(config.sigma0 >= 0.0)) {
        throw ConfigError("key 'sigma0': must be >= 0 (0 picks the maximum rate)");
    }
    if (!(config.queue_penalty_weight > 0.0)) {
        throw ConfigError("key 'queue_penalty_weight': must be positive");
    }
    if (!(config.reward_noise_std >= 0.0)) {
        throw ConfigError("key 'reward_noise_std': must be >= 0");
    }
    if (config.arm_counts.empty()) {
        throw ConfigError("key 'arm_counts': need at least one entry");
    }
    for (int k : config.arm_counts) {
        if (k < 2) {
            throw ConfigError("key 'arm_counts': every entry must be at least 2");
        }
    }
}

}  // namespace bandit
