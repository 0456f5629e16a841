#pragma once
/**
 * @file metrics.hpp
 * @brief Figures of merit over simulation traces: objective-satisfaction
 *        fractions, dB-domain statistics, and baseline comparisons.
 *
 * Statistics are computed directly on the dBm values (not linear milliwatts).
 * Percentiles use linear interpolation between closest ranks: h = q*(n-1).
 */

#include <span>
#include <string>

#include "risray/scene.hpp"
#include "risray/simulation.hpp"

namespace risray {

struct DbStats {
    double mean = 0.0;
    double median = 0.0;
    double p10 = 0.0;
    double p90 = 0.0;
};

/// Baseline-stat minus trace-stat; positive means a reduction.
struct StatDeltas {
    double mean = 0.0;
    double median = 0.0;
    double p10 = 0.0;
    double p90 = 0.0;
};

/// Fraction of steps >= skip_steps on which the receiver's role objective
/// holds: power >= threshold for detector/subscriber, power < threshold for
/// victim. A sample exactly at threshold counts as detected and as interfered.
double satisfaction_fraction(const SimulationTrace& trace, const Receiver& receiver,
                             int skip_steps);

DbStats db_statistics(std::span<const double> series_dbm);

StatDeltas compare_traces(const SimulationTrace& baseline, const SimulationTrace& trace,
                          const std::string& receiver_id, int skip_steps);

}  // namespace risray
