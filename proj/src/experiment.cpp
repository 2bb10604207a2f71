#include "bandit/experiment.hpp"

#include <stdexcept>

#include "bandit/baselines.hpp"
#include "bandit/budgeted_ucb.hpp"
#include "bandit/rng.hpp"

namespace bandit {

std::vector<double> make_thresholds(const ConstraintSchedule& schedule, std::uint64_t seed) {
    std::mt19937_64 rng = make_engine(seed, "thresholds");
    std::vector<double> thresholds;
    thresholds.reserve(static_cast<std::size_t>(schedule.horizon));
    for (long t = 1; t <= schedule.horizon; ++t) {
        thresholds.push_back(threshold_at(schedule, t, rng));
    }
    return thresholds;
}

std::unique_ptr<Policy> make_policy(const std::string& name, const ExperimentConfig& config,
                                    std::uint64_t seed) {
    if (name == "budgeted_ucb") {
        return std::make_unique<BudgetedUcbPolicy>(
            config.num_arms, BudgetSchedule{config.delta0, config.resolved_budget_horizon()},
            config.constrained_cost_index);
    }
    if (name == "ucb1") {
        return std::make_unique<Ucb1Policy>(config.num_arms);
    }
    if (name == "thompson") {
        return std::make_unique<ThompsonPolicy>(config.num_arms, config.resolved_sigma0(),
                                                substream_seed(seed, "policy/thompson"));
    }
    if (name == "epsilon_greedy") {
        return std::make_unique<EpsilonGreedyPolicy>(
            config.num_arms, config.epsilon, substream_seed(seed, "policy/epsilon_greedy"));
    }
    if (name == "virtual_queue") {
        return std::make_unique<VirtualQueuePolicy>(config.num_arms,
                                                    config.queue_penalty_weight);
    }
    throw ConfigError("unknown policy '" + name + "'");
}

std::vector<RoundRecord> run_single(const ExperimentConfig& config,
                                    const std::string& policy_name, std::uint64_t seed,
                                    const std::vector<double>& thresholds) {
    if (static_cast<long>(thresholds.size()) != config.horizon) {
        throw std::invalid_argument("run_single: got " + std::to_string(thresholds.size()) +
                                    " thresholds for horizon " +
                                    std::to_string(config.horizon));
    }
    const WirelessEnvironment env(config.link(), config.grid(), config.reward_noise_std);
    std::mt19937_64 env_rng = make_engine(seed, "env/" + policy_name);
    const std::unique_ptr<Policy> policy = make_policy(policy_name, config, seed);

    // The harness keeps its own budget/violation bookkeeping so the logged
    // columns are policy-agnostic; both are the values in force when the
    // policy decides, i.e. before this round's feedback lands.
    const BudgetSchedule budget{config.delta0, config.resolved_budget_horizon()};
    ViolationLedger ledger;

    std::vector<RoundRecord> trace;
    trace.reserve(static_cast<std::size_t>(config.horizon));
    for (long t = 1; t <= config.horizon; ++t) {
        const double threshold = thresholds[static_cast<std::size_t>(t - 1)];
        const double budget_now = budget_at(budget, t);
        const double rate_now = violation_rate(ledger);
        const PolicyDecision decision = policy->select(threshold, t);
        const Feedback feedback = env.step(decision.arm, env_rng);
        const bool violated = feedback.cost > threshold;
        policy->update(decision.arm, feedback.reward, feedback.cost, threshold);
        ledger.rounds_seen += 1;
        ledger.violation_count += violated ? 1 : 0;
        trace.push_back({t, threshold, decision.arm, feedback.reward, feedback.cost,
                         violated, decision.mode, budget_now, rate_now});
    }
    return trace;
}

RunArtifact run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    RunArtifact artifact;
    artifact.config = config;
    artifact.version = kVersion;

    std::vector<std::vector<double>> thresholds;
    std::vector<ClairvoyantOptimum> oracles;
    for (std::uint64_t seed : config.seeds) {
        thresholds.push_back(make_thresholds(config.constraint_schedule(), seed));
        oracles.push_back(clairvoyant(config.grid(), config.link(), thresholds.back()));
    }

    for (const std::string& name : config.policies) {
        try {
            std::vector<std::vector<RoundRecord>> traces;
            std::vector<MetricCurves> curves;
            for (std::size_t s = 0; s < config.seeds.size(); ++s) {
                traces.push_back(run_single(config, name, config.seeds[s], thresholds[s]));
                curves.push_back(compute_curves(traces.back(), oracles[s], config.lambda));
            }
            artifact.traces[name] = std::move(traces);
            artifact.aggregates[name] = aggregate(curves);
            artifact.curves[name] = std::move(curves);
        } catch (const std::exception& e) {
            artifact.traces.erase(name);
            artifact.curves.erase(name);
            artifact.aggregates.erase(name);
            artifact.failures.push_back(name + ": " + e.what());
        }
    }
    return artifact;
}

ScalabilityResult run_scalability(const ExperimentConfig& config,
                                  const std::vector<int>& arm_counts) {
    if (arm_counts.empty()) {
        throw ConfigError("key 'arm_counts': need at least one entry");
    }
    ExperimentConfig base = config;
    base.schedule = ScheduleKind::LinearVShape;

    ScalabilityResult result;
    result.config = base;
    result.version = kVersion;
    result.arm_counts = arm_counts;

    for (int k : arm_counts) {
        ExperimentConfig sized = base;
        sized.num_arms = k;
        const RunArtifact artifact = run_experiment(sized);
        if (!artifact.failures.empty()) {
            std::string what = "scalability sweep failed at K=" + std::to_string(k);
            for (const std::string& failure : artifact.failures) what += "; " + failure;
            throw std::runtime_error(what);
        }
        for (const auto& [name, agg] : artifact.aggregates) {
            result.mean_final_objective[name].push_back(agg.mean.overall_objective.back());
        }
    }
    return result;
}

}  // namespace bandit
