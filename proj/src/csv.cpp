#include "bandit/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace bandit {
namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("short write to '" + path.string() + "'");
    }
}

// Policies in config order, restricted to the ones that produced results.
template <typename Map>
std::vector<std::string> present_policies(const std::vector<std::string>& order,
                                          const Map& results) {
    std::vector<std::string> names;
    for (const std::string& name : order) {
        if (results.count(name)) names.push_back(name);
    }
    return names;
}

std::string trace_csv(const std::vector<RoundRecord>& trace) {
    std::string out = "t,threshold,arm,reward,cost,violated,mode,budget,empirical_rate\n";
    out.reserve(out.size() + trace.size() * 96);
    for (const RoundRecord& row : trace) {
        out += std::to_string(row.t);
        out += ',';
        out += format_double(row.threshold);
        out += ',';
        out += std::to_string(row.arm);
        out += ',';
        out += format_double(row.reward);
        out += ',';
        out += format_double(row.cost);
        out += ',';
        out += row.violated ? '1' : '0';
        out += ',';
        out += to_string(row.mode);
        out += ',';
        out += format_double(row.budget);
        out += ',';
        out += format_double(row.empirical_rate);
        out += '\n';
    }
    return out;
}

std::string aggregate_csv(const RunArtifact& artifact, const std::vector<std::string>& names,
                          const std::vector<double> MetricCurves::*curve) {
    std::string out = "t";
    for (const std::string& name : names) {
        out += ',' + name + "_mean," + name + "_std";
    }
    out += '\n';
    const std::size_t len = static_cast<std::size_t>(artifact.config.horizon);
    for (std::size_t i = 0; i < len; ++i) {
        out += std::to_string(i + 1);
        for (const std::string& name : names) {
            const AggregateCurves& agg = artifact.aggregates.at(name);
            out += ',' + format_double((agg.mean.*curve)[i]);
            out += ',' + format_double((agg.stddev.*curve)[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string manifest_text(const ExperimentConfig& config, const std::string& version) {
    // The version rides in a comment so the manifest stays loadable as a
    // config file and a rerun reproduces the experiment.
    return "# banditsim version " + version + "\n" + serialize_config(config);
}

void emit_outputs(const RunArtifact& artifact, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "manifest.txt", manifest_text(artifact.config, artifact.version));
    if (artifact.config.policies.empty()) {
        std::cerr << "warning: no policies selected; writing the manifest only\n";
        return;
    }
    for (const std::string& name : present_policies(artifact.config.policies, artifact.traces)) {
        const auto& per_seed = artifact.traces.at(name);
        for (std::size_t s = 0; s < per_seed.size(); ++s) {
            const std::string file =
                "trace_" + name + "_seed" + std::to_string(artifact.config.seeds[s]) + ".csv";
            write_file(out_dir / file, trace_csv(per_seed[s]));
        }
    }
    const std::vector<std::string> names =
        present_policies(artifact.config.policies, artifact.aggregates);
    if (names.empty()) return;
    write_file(out_dir / "violations.csv",
               aggregate_csv(artifact, names, &MetricCurves::cumulative_violations));
    write_file(out_dir / "objective.csv",
               aggregate_csv(artifact, names, &MetricCurves::overall_objective));
    write_file(out_dir / "regret.csv",
               aggregate_csv(artifact, names, &MetricCurves::absolute_regret));
}

void emit_scalability(const ScalabilityResult& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "manifest.txt", manifest_text(result.config, result.version));
    const std::vector<std::string> names =
        present_policies(result.config.policies, result.mean_final_objective);
    std::string out = "K";
    for (const std::string& name : names) out += ',' + name + "_mean";
    out += '\n';
    for (std::size_t i = 0; i < result.arm_counts.size(); ++i) {
        out += std::to_string(result.arm_counts[i]);
        for (const std::string& name : names) {
            out += ',' + format_double(result.mean_final_objective.at(name)[i]);
        }
        out += '\n';
    }
    write_file(out_dir / "scalability.csv", out);
}

}  // namespace bandit
