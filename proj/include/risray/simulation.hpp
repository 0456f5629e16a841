#pragma once
/**
 * @file simulation.hpp
 * @brief Time-stepped execution: apply a RIS schedule to the scene, compute
 *        per-step received power at each receiver, emit traces and probe
 *        reports. The world is static except for the RIS, so per-interval
 *        powers are computed once and replicated across the dwell.
 */

#include <string>
#include <vector>

#include "risray/control.hpp"
#include "risray/propagation.hpp"
#include "risray/scene.hpp"

namespace risray {

/// Per-time-step received power (dBm) per receiver plus the active setting.
struct SimulationTrace {
    std::vector<std::string> receiver_ids;
    std::vector<int> setting_per_step;
    std::vector<std::vector<double>> power_dbm;  ///< [step][receiver]

    int steps() const { return static_cast<int>(setting_per_step.size()); }
    int receiver_index(const std::string& id) const;  // throws on unknown id
};

/// Received power at every receiver for every RIS setting.
ProbeReport probe_reports(const Scene& scene, const PropagationParams& params);

/// Deterministic time-stepped run; intervals are computed independently
/// (OpenMP) and assembled in order, so identical inputs give bit-identical
/// traces for any thread count.
SimulationTrace run_simulation(const Scene& scene, const RisSchedule& schedule,
                               const PropagationParams& params);

/// CSV: header `step,setting_index,<rx-id>...`, one row per step, 6 decimals.
std::string trace_csv(const SimulationTrace& trace);

/// Parse a trace written by trace_csv; throws on malformed input.
SimulationTrace parse_trace_csv(const std::string& csv);

}  // namespace risray
