#pragma once
/**
 * @file commands.hpp
 * @brief The four user-facing commands behind the `risray` CLI, exposed as
 *        library functions so tests can drive them directly.
 */

#include <optional>
#include <string>

#include "risray/config.hpp"

namespace risray::cmd {

/// Overrides applied on top of the loaded scenario config.
struct RunOptions {
    std::optional<std::string> policy;
    std::optional<int> dwell;
    std::optional<int> intervals;
    /// Restrict context-policy objectives to these receiver ids (in order).
    std::vector<std::string> objective_ids;
};

/// Power-map CSV for one RIS setting, or for the plain-wall baseline.
/// Exactly one of angle_deg / baseline must be given; the angle must be an
/// exact member of the panel's angle set.
void map(const ScenarioConfig& config, std::optional<double> angle_deg, bool baseline,
         std::optional<double> resolution, const std::string& out_path);

/// Probe-report CSV: one row per RIS setting, one column per receiver.
void sweep(const ScenarioConfig& config, const std::string& out_path);

/// Time-domain run under the selected policy: trace CSV plus a metrics JSON
/// reporting satisfaction both including and excluding the probe phase.
void run(const ScenarioConfig& config, const RunOptions& options,
         const std::string& trace_path, const std::string& metrics_path);

/// Per-receiver baseline-vs-trace dB deltas for two trace CSVs.
void compare(const std::string& baseline_path, const std::string& trace_path,
             int skip_steps, const std::string& out_path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace risray::cmd
