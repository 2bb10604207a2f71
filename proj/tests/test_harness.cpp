#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "bandit/config.hpp"
#include "bandit/csv.hpp"
#include "bandit/experiment.hpp"
#include "bandit/metrics.hpp"
#include "bandit/rng.hpp"
#include "bandit/types.hpp"

using namespace bandit;

namespace {

namespace fs = std::filesystem;

// Short, cheap configuration for harness round trips.
ExperimentConfig small_config() {
    ExperimentConfig config;
    config.horizon = 200;
    config.seeds = {1, 2};
    config.policies = {"budgeted_ucb", "ucb1"};
    return config;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

// Unique scratch directory, removed on scope exit.
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("banditsim_test_" + tag + "_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("default configuration matches the documented reference setup") {
    ExperimentConfig config;
    CHECK(config.horizon == 2000);
    CHECK(config.num_arms == 11);
    CHECK(config.delta0 == 0.5);
    CHECK(config.budget_horizon == 0);
    CHECK(config.resolved_budget_horizon() == 2000);
    CHECK(config.schedule == ScheduleKind::UniformRandom);
    CHECK(config.lambda == 1e6);
    CHECK(config.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(config.policies ==
          std::vector<std::string>{"budgeted_ucb", "ucb1", "thompson",
                                   "epsilon_greedy", "virtual_queue"});
    CHECK(config.constrained_cost_index == CostIndex::Ucb);

    const ConstraintSchedule schedule = config.constraint_schedule();
    CHECK(schedule.low == config.p_min);
    CHECK(schedule.high == config.p_max);
    CHECK(schedule.horizon == config.horizon);

    // sigma0 = 0 resolves to the top achievable rate.
    CHECK(config.resolved_sigma0() ==
          doctest::Approx(throughput(config.link(), config.p_max)).epsilon(1e-12));
    config.sigma0 = 123.0;
    CHECK(config.resolved_sigma0() == 123.0);

    CHECK_NOTHROW(validate_config(ExperimentConfig{}));
}

TEST_CASE("configuration text round-trips byte for byte") {
    SUBCASE("defaults") {
        const std::string text = serialize_config(ExperimentConfig{});
        const ExperimentConfig parsed = parse_config(text);
        CHECK(serialize_config(parsed) == text);
    }

    SUBCASE("every field off its default") {
        ExperimentConfig config;
        config.horizon = 777;
        config.num_arms = 7;
        config.delta0 = 0.25;
        config.budget_horizon = 500;
        config.schedule = ScheduleKind::LinearVShape;
        config.lambda = 2.5e5;
        config.seeds = {10, 20, 30};
        config.policies = {"thompson", "budgeted_ucb"};
        config.bandwidth = 2e6;
        config.noise_density = 3e-10;
        config.distance = 12.5;
        config.pathloss_exponent = 2.7;
        config.p_min = 0.05;
        config.p_max = 0.8;
        config.epsilon = 0.2;
        config.sigma0 = 42.0;
        config.queue_penalty_weight = 3.0;
        config.reward_noise_std = 11.0;
        config.constrained_cost_index = CostIndex::Mean;
        config.arm_counts = {3, 9};

        const std::string text = serialize_config(config);
        const ExperimentConfig parsed = parse_config(text);
        CHECK(serialize_config(parsed) == text);
        CHECK(parsed.horizon == 777);
        CHECK(parsed.schedule == ScheduleKind::LinearVShape);
        CHECK(parsed.seeds == config.seeds);
        CHECK(parsed.policies == config.policies);
        CHECK(parsed.constrained_cost_index == CostIndex::Mean);
        CHECK(parsed.arm_counts == config.arm_counts);
        CHECK(parsed.p_max == 0.8);
    }

    SUBCASE("comments and blank lines are ignored") {
        const ExperimentConfig parsed = parse_config(
            "# leading comment\n"
            "\n"
            "horizon = 123   # trailing comment\n"
            "  delta0=0.75\n");
        CHECK(parsed.horizon == 123);
        CHECK(parsed.delta0 == 0.75);
        CHECK(parsed.num_arms == 11);  // untouched fields keep defaults
    }
}

TEST_CASE("parse errors name the line or key") {
    CHECK_THROWS_WITH_AS(parse_config("horizon 2000\n"),
                         doctest::Contains("line 1"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("\nwhat = 1\n"),
                         doctest::Contains("unknown key 'what'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("horizon = twenty\n"),
                         doctest::Contains("horizon"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("delta0 = \n"),
                         doctest::Contains("delta0"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("schedule = sometimes\n"),
                         doctest::Contains("schedule"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("constrained_cost_index = maybe\n"),
                         doctest::Contains("constrained_cost_index"), ConfigError);
    CHECK_THROWS_AS(parse_config("seeds = 1, x\n"), ConfigError);
}

TEST_CASE("validation names the offending field") {
    auto broken = [](auto mutate) {
        ExperimentConfig config;
        mutate(config);
        return config;
    };
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.horizon = 0; })),
        doctest::Contains("horizon"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.num_arms = 1; })),
        doctest::Contains("num_arms"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.delta0 = 1.5; })),
        doctest::Contains("delta0"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.seeds.clear(); })),
        doctest::Contains("seeds"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.policies = {"ucb1", "ucb1"}; })),
        doctest::Contains("policies"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.policies = {"dqn"}; })),
        doctest::Contains("dqn"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.p_min = 0.9; c.p_max = 0.2; })),
        doctest::Contains("p_m"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.epsilon = -0.1; })),
        doctest::Contains("epsilon"), ConfigError);
    CHECK_THROWS_WITH_AS(
        validate_config(broken([](auto& c) { c.arm_counts = {1}; })),
        doctest::Contains("arm_counts"), ConfigError);
}

TEST_CASE("missing config file is a configuration error") {
    CHECK_THROWS_WITH_AS(load_config_file("/nonexistent/banditsim.cfg"),
                         doctest::Contains("cannot open"), ConfigError);
}

TEST_CASE("schedule and cost-index names") {
    CHECK(to_string(ScheduleKind::UniformRandom) == "random");
    CHECK(to_string(ScheduleKind::LinearVShape) == "linear");
    CHECK(schedule_kind_from_string("random") == ScheduleKind::UniformRandom);
    CHECK(schedule_kind_from_string("linear") == ScheduleKind::LinearVShape);
    CHECK(to_string(CostIndex::Ucb) == "ucb");
    CHECK(to_string(CostIndex::Mean) == "mean");
    CHECK(cost_index_from_string("ucb") == CostIndex::Ucb);
    CHECK(cost_index_from_string("mean") == CostIndex::Mean);
}

TEST_CASE("substream seeding separates tagged streams") {
    CHECK(substream_seed(1, "thresholds") != substream_seed(1, "policy/thompson"));
    CHECK(substream_seed(1, "thresholds") != substream_seed(2, "thresholds"));
    CHECK(substream_seed(7, "env/ucb1") == substream_seed(7, "env/ucb1"));
}

TEST_CASE("threshold generation is seed-deterministic") {
    ConstraintSchedule random_schedule;
    random_schedule.horizon = 100;

    const auto a = make_thresholds(random_schedule, 1);
    const auto b = make_thresholds(random_schedule, 1);
    const auto c = make_thresholds(random_schedule, 2);
    REQUIRE(a.size() == 100);
    CHECK(a == b);
    CHECK(a != c);

    ConstraintSchedule linear_schedule{ScheduleKind::LinearVShape, 0.1, 1.0, 100};
    const auto d = make_thresholds(linear_schedule, 1);
    const auto e = make_thresholds(linear_schedule, 99);
    CHECK(d == e);  // deterministic ramp ignores the seed
    CHECK(d.front() == doctest::Approx(1.0));
}

TEST_CASE("policy factory covers every known policy") {
    const ExperimentConfig config = small_config();
    for (const std::string& name : known_policies()) {
        const auto policy = make_policy(name, config, 1);
        REQUIRE(policy != nullptr);
        CHECK(policy->name() == name);
    }
    CHECK_THROWS_AS(make_policy("dqn", config, 1), ConfigError);
}

TEST_CASE("a one-round run logs the decision-time state") {
    ExperimentConfig config = small_config();
    config.horizon = 1;
    const auto thresholds = make_thresholds(config.constraint_schedule(), 1);
    const auto trace = run_single(config, "budgeted_ucb", 1, thresholds);

    REQUIRE(trace.size() == 1);
    const RoundRecord& row = trace[0];
    CHECK(row.t == 1);
    CHECK(row.threshold == thresholds[0]);
    CHECK(row.arm == 0);  // every arm unplayed, first index wins
    CHECK(row.mode == Mode::Explore);
    CHECK(row.budget == 0.5);          // full initial allowance
    CHECK(row.empirical_rate == 0.0);  // no completed rounds yet
    CHECK(row.violated == (row.cost > row.threshold));
}

TEST_CASE("run_single rejects a threshold sequence of the wrong length") {
    const ExperimentConfig config = small_config();
    const std::vector<double> thresholds(5, 0.5);
    CHECK_THROWS_AS(run_single(config, "ucb1", 1, thresholds),
                    std::invalid_argument);
}

TEST_CASE("trace bookkeeping is internally consistent") {
    ExperimentConfig config = small_config();
    const auto thresholds = make_thresholds(config.constraint_schedule(), 3);
    const auto trace = run_single(config, "budgeted_ucb", 3, thresholds);
    REQUIRE(trace.size() == 200);

    const auto levels = power_levels(config.grid());
    const BudgetSchedule budget{config.delta0, config.resolved_budget_horizon()};
    long violations_so_far = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const RoundRecord& row = trace[i];
        CHECK(row.t == static_cast<long>(i + 1));
        CHECK(row.threshold == thresholds[i]);
        REQUIRE(row.arm >= 0);
        REQUIRE(row.arm < config.num_arms);
        CHECK(row.cost == levels[static_cast<std::size_t>(row.arm)]);
        CHECK(row.violated == (row.cost > row.threshold));
        CHECK(row.budget == doctest::Approx(budget_at(budget, row.t)).epsilon(1e-12));
        const double expected_rate =
            i == 0 ? 0.0
                   : static_cast<double>(violations_so_far) / static_cast<double>(i);
        CHECK(row.empirical_rate == doctest::Approx(expected_rate).epsilon(1e-12));
        violations_so_far += row.violated ? 1 : 0;
    }
}

TEST_CASE("experiment runs are reproducible and threshold-paired") {
    const ExperimentConfig config = small_config();
    const RunArtifact first = run_experiment(config);
    const RunArtifact second = run_experiment(config);

    REQUIRE(first.failures.empty());
    CHECK(first.version == kVersion);
    REQUIRE(first.traces.size() == config.policies.size());
    REQUIRE(first.curves.size() == config.policies.size());
    REQUIRE(first.aggregates.size() == config.policies.size());

    for (const std::string& name : config.policies) {
        const auto& runs = first.traces.at(name);
        REQUIRE(runs.size() == config.seeds.size());
        for (std::size_t s = 0; s < runs.size(); ++s) {
            REQUIRE(runs[s].size() == static_cast<std::size_t>(config.horizon));

            // Identical rerun, round for round.
            const auto& rerun = second.traces.at(name)[s];
            for (std::size_t i = 0; i < runs[s].size(); ++i) {
                CHECK(runs[s][i].arm == rerun[i].arm);
                CHECK(runs[s][i].reward == rerun[i].reward);
                CHECK(runs[s][i].threshold == rerun[i].threshold);
            }

            // Every policy faces the same threshold sequence for this seed.
            const auto& reference = first.traces.at(config.policies.front())[s];
            for (std::size_t i = 0; i < runs[s].size(); ++i) {
                CHECK(runs[s][i].threshold == reference[i].threshold);
            }
        }
    }
}

TEST_CASE("experiment curves match an independent recomputation") {
    const ExperimentConfig config = small_config();
    const RunArtifact artifact = run_experiment(config);
    REQUIRE(artifact.failures.empty());

    for (const std::string& name : config.policies) {
        for (std::size_t s = 0; s < config.seeds.size(); ++s) {
            const auto thresholds =
                make_thresholds(config.constraint_schedule(), config.seeds[s]);
            const auto oracle = clairvoyant(config.grid(), config.link(), thresholds);
            const MetricCurves expected =
                compute_curves(artifact.traces.at(name)[s], oracle, config.lambda);
            const MetricCurves& stored = artifact.curves.at(name)[s];
            CHECK(stored.cumulative_violations.back() ==
                  expected.cumulative_violations.back());
            CHECK(stored.overall_objective.back() == expected.overall_objective.back());
            CHECK(stored.absolute_regret.back() == expected.absolute_regret.back());
            CHECK(stored.final_violation_rate == expected.final_violation_rate);
        }
    }
}

TEST_CASE("scalability sweep matches a hand-run linear experiment") {
    ExperimentConfig config = small_config();
    config.horizon = 100;
    const ScalabilityResult sweep = run_scalability(config, {2, 11});

    CHECK(sweep.version == kVersion);
    CHECK(sweep.arm_counts == std::vector<int>{2, 11});
    REQUIRE(sweep.mean_final_objective.size() == config.policies.size());
    for (const std::string& name : config.policies) {
        REQUIRE(sweep.mean_final_objective.at(name).size() == 2);
    }

    ExperimentConfig linear = config;
    linear.schedule = ScheduleKind::LinearVShape;
    linear.num_arms = 11;
    const RunArtifact reference = run_experiment(linear);
    for (const std::string& name : config.policies) {
        CHECK(sweep.mean_final_objective.at(name)[1] ==
              reference.aggregates.at(name).mean.overall_objective.back());
    }

    CHECK_THROWS_AS(run_scalability(config, {}), ConfigError);
}

TEST_CASE("seventeen-digit formatting round-trips doubles bit for bit") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> samples = {0.0,       1.0,     0.1,  1e-300,
                                   1.2345e17, 5.5e-12, 2e9,  0.45999999999999996,
                                   545968.3691052925};
    for (int i = 0; i < 500; ++i) {
        samples.push_back(unit(rng) * std::pow(10.0, i % 60 - 30));
    }
    for (double value : samples) {
        const std::string text = format_double(value);
        CHECK(std::strtod(text.c_str(), nullptr) == value);
    }
}

TEST_CASE("output directory contents") {
    ExperimentConfig config = small_config();
    config.horizon = 50;
    const RunArtifact artifact = run_experiment(config);
    REQUIRE(artifact.failures.empty());

    TempDir dir("emit");
    emit_outputs(artifact, dir.path);

    SUBCASE("expected file set") {
        std::set<std::string> names;
        for (const auto& entry : fs::directory_iterator(dir.path)) {
            names.insert(entry.path().filename().string());
        }
        // 2 policies x 2 seeds traces + 3 aggregate tables + manifest.
        CHECK(names == std::set<std::string>{
                           "manifest.txt", "objective.csv", "regret.csv",
                           "trace_budgeted_ucb_seed1.csv", "trace_budgeted_ucb_seed2.csv",
                           "trace_ucb1_seed1.csv", "trace_ucb1_seed2.csv",
                           "violations.csv"});
    }

    SUBCASE("headers are the documented column contracts") {
        CHECK(first_line(read_file(dir.path / "trace_ucb1_seed1.csv")) ==
              "t,threshold,arm,reward,cost,violated,mode,budget,empirical_rate");
        CHECK(first_line(read_file(dir.path / "violations.csv")) ==
              "t,budgeted_ucb_mean,budgeted_ucb_std,ucb1_mean,ucb1_std");
        CHECK(first_line(read_file(dir.path / "objective.csv")) ==
              "t,budgeted_ucb_mean,budgeted_ucb_std,ucb1_mean,ucb1_std");
    }

    SUBCASE("trace files have one data row per round") {
        const std::string text = read_file(dir.path / "trace_budgeted_ucb_seed1.csv");
        CHECK(std::count(text.begin(), text.end(), '\n') == 51);
    }

    SUBCASE("manifest loads back as the same configuration") {
        const std::string manifest = read_file(dir.path / "manifest.txt");
        CHECK(first_line(manifest) == "# banditsim version 0.1.0");
        const ExperimentConfig parsed = parse_config(manifest);
        CHECK(serialize_config(parsed) == serialize_config(config));
    }

    SUBCASE("re-emitting produces byte-identical files") {
        TempDir again("emit_again");
        emit_outputs(artifact, again.path);
        for (const auto& entry : fs::directory_iterator(dir.path)) {
            const auto name = entry.path().filename();
            CHECK(read_file(entry.path()) == read_file(again.path / name));
        }
    }
}

TEST_CASE("an empty policy list emits only the manifest") {
    RunArtifact artifact;
    artifact.config = small_config();
    artifact.config.policies = {};
    artifact.version = kVersion;

    TempDir dir("emit_empty");
    emit_outputs(artifact, dir.path);
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir.path)) {
        names.push_back(entry.path().filename().string());
    }
    REQUIRE(names.size() == 1);
    CHECK(names[0] == "manifest.txt");
}

TEST_CASE("scalability emission") {
    ExperimentConfig config = small_config();
    config.horizon = 50;
    const ScalabilityResult sweep = run_scalability(config, {2, 5});

    TempDir dir("emit_sweep");
    emit_scalability(sweep, dir.path);
    const std::string csv = read_file(dir.path / "scalability.csv");
    CHECK(first_line(csv) == "K,budgeted_ucb_mean,ucb1_mean");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(fs::exists(dir.path / "manifest.txt"));
}
