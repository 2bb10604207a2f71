// Command-line front end: run one experiment, sweep arm counts, or check a
// config file. Exit codes: 0 success, 1 bad configuration or usage, 2 runtime
// failure.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bandit/config.hpp"
#include "bandit/csv.hpp"
#include "bandit/experiment.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir = "out";
    long seeds = 0;  // 0 = keep the config's seed list
    std::string schedule;
    std::string policies;
    long horizon = 0;  // 0 = keep the config's horizon
};

void add_common_options(CLI::App* cmd, CliOptions& options) {
    cmd->add_option("--config", options.config_path, "Config file (key = value lines)");
    cmd->add_option("--out", options.out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_option("--seeds", options.seeds, "Run seeds 1..N instead of the config's list");
    cmd->add_option("--schedule", options.schedule, "Threshold schedule: random or linear");
    cmd->add_option("--policies", options.policies, "Comma-separated policy list");
    cmd->add_option("--horizon", options.horizon, "Number of rounds");
}

bandit::ExperimentConfig resolve_config(const CliOptions& options) {
    bandit::ExperimentConfig config;
    if (!options.config_path.empty()) {
        config = bandit::load_config_file(options.config_path);
    }
    if (options.horizon != 0) {
        config.horizon = options.horizon;
    }
    if (!options.schedule.empty()) {
        config.schedule = bandit::schedule_kind_from_string(options.schedule);
    }
    if (options.seeds != 0) {
        if (options.seeds < 1) {
            throw bandit::ConfigError("flag '--seeds': must be at least 1");
        }
        config.seeds.clear();
        for (long s = 1; s <= options.seeds; ++s) {
            config.seeds.push_back(static_cast<std::uint64_t>(s));
        }
    }
    if (!options.policies.empty()) {
        config.policies = bandit::parse_config("policies = " + options.policies).policies;
    }
    bandit::validate_config(config);
    return config;
}

int do_run(const CliOptions& options) {
    const bandit::ExperimentConfig config = resolve_config(options);
    const bandit::RunArtifact artifact = bandit::run_experiment(config);
    bandit::emit_outputs(artifact, options.out_dir);
    for (const auto& [name, agg] : artifact.aggregates) {
        std::cout << name << ": mean V(T) = " << agg.mean.cumulative_violations.back()
                  << ", mean objective = " << agg.mean.overall_objective.back()
                  << ", mean regret = " << agg.mean.absolute_regret.back() << "\n";
    }
    std::cout << "wrote results to " << options.out_dir << "\n";
    for (const std::string& failure : artifact.failures) {
        std::cerr << "policy failed: " << failure << "\n";
    }
    return artifact.failures.empty() ? 0 : 2;
}

int do_sweep(const CliOptions& options) {
    const bandit::ExperimentConfig config = resolve_config(options);
    const bandit::ScalabilityResult result =
        bandit::run_scalability(config, config.arm_counts);
    bandit::emit_scalability(result, options.out_dir);
    std::cout << "swept " << result.arm_counts.size() << " arm counts over "
              << result.mean_final_objective.size() << " policies; wrote results to "
              << options.out_dir << "\n";
    return 0;
}

int do_validate(const CliOptions& options) {
    const bandit::ExperimentConfig config = resolve_config(options);
    std::cout << bandit::serialize_config(config);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained-bandit simulator for a power-controlled wireless link"};
    app.require_subcommand(1);
    CliOptions options;

    CLI::App* run = app.add_subcommand("run", "Run one multi-seed experiment");
    add_common_options(run, options);
    CLI::App* sweep =
        app.add_subcommand("sweep", "Rerun the linear-schedule experiment per arm count");
    add_common_options(sweep, options);
    CLI::App* validate =
        app.add_subcommand("validate-config", "Check a config and print its canonical form");
    add_common_options(validate, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return do_run(options);
        if (sweep->parsed()) return do_sweep(options);
        if (validate->parsed()) return do_validate(options);
        return 1;
    } catch (const bandit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
