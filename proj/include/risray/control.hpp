#pragma once
/**
 * @file control.hpp
 * @brief RIS scheduling policies: static hold, blind triangle-wave sweep, and
 *        context-aware probe-then-alternate, plus best-setting selection from
 *        receiver probe reports.
 */

#include <span>
#include <string>
#include <vector>

namespace risray {

/// Time-indexed sequence of RIS setting indices, one entry per dwell interval.
struct RisSchedule {
    int dwell_steps = 1;         ///< time steps the RIS holds each entry
    std::vector<int> entries;    ///< setting index per dwell interval

    int total_steps() const { return dwell_steps * static_cast<int>(entries.size()); }
    /// Setting active at the given absolute time step.
    int setting_at_step(int step) const {
        return entries[static_cast<std::size_t>(step / dwell_steps)];
    }
};

/// Power matrix indexed [setting][receiver], from probing every RIS setting.
struct ProbeReport {
    std::vector<std::string> receiver_ids;
    std::vector<std::vector<double>> power_dbm;  ///< one row per setting

    int settings() const { return static_cast<int>(power_dbm.size()); }
    int receiver_index(const std::string& id) const;  // throws on unknown id
};

enum class Sense { Maximize, Minimize };

struct Objective {
    std::string receiver_id;
    Sense sense = Sense::Maximize;
    double threshold_dbm = 0.0;
};

/// Fixed setting held for the whole horizon (Scenario-1 style control).
RisSchedule static_schedule(int setting_index, int n_settings, int dwell_steps, int n_intervals);

/// Blind triangle wave 0,1,..,n-1,n-2,..,1 repeating, truncated to the horizon.
RisSchedule sweep_schedule(int n_settings, int dwell_steps, int n_intervals);

/// argmax (maximize) or argmin (minimize) of the receiver's probe column;
/// ties break to the lowest setting index.
int best_setting(const ProbeReport& report, const Objective& objective);

/// Probe phase visiting settings 0..n-1 in order, then round-robin over the
/// deduplicated per-objective best settings. Throws when the horizon is
/// shorter than the probe phase.
RisSchedule context_schedule(const ProbeReport& report, std::span<const Objective> objectives,
                             int n_settings, int dwell_steps, int n_intervals);

}  // namespace risray
