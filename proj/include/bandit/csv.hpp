#pragma once

#include <filesystem>
#include <string>

#include "bandit/experiment.hpp"

namespace bandit {

/// 17-significant-digit formatting; round-trips any double bit-exactly.
std::string format_double(double value);

/// Writes one trace CSV per (policy, seed), the three aggregate CSVs
/// (violations, objective, regret), and the manifest. An empty policy list
/// produces the manifest only, with a warning on stderr.
void emit_outputs(const RunArtifact& artifact, const std::filesystem::path& out_dir);

/// Writes the scalability CSV (grouped-bar data) and the manifest.
void emit_scalability(const ScalabilityResult& result, const std::filesystem::path& out_dir);

std::string manifest_text(const ExperimentConfig& config, const std::string& version);

}  // namespace bandit
