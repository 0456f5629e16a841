#include "risray/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace risray {

double satisfaction_fraction(const SimulationTrace& trace, const Receiver& receiver,
                             int skip_steps) {
    if (skip_steps < 0 || skip_steps >= trace.steps())
        throw std::invalid_argument("empty evaluation window");
    const int col = trace.receiver_index(receiver.id);
    int satisfied = 0;
    for (int step = skip_steps; step < trace.steps(); ++step) {
        const double p = trace.power_dbm[static_cast<std::size_t>(step)][static_cast<std::size_t>(col)];
        const bool ok = (receiver.role == ReceiverRole::Victim) ? (p < receiver.threshold_dbm)
                                                                : (p >= receiver.threshold_dbm);
        if (ok) ++satisfied;
    }
    return static_cast<double>(satisfied) / static_cast<double>(trace.steps() - skip_steps);
}

namespace {

// Linear interpolation between closest ranks on a sorted series.
double percentile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    const double h = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

DbStats db_statistics(std::span<const double> series_dbm) {
    if (series_dbm.empty()) throw std::invalid_argument("no samples");
    std::vector<double> sorted(series_dbm.begin(), series_dbm.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double v : sorted) sum += v;
    DbStats stats;
    stats.mean = sum / static_cast<double>(sorted.size());
    stats.median = percentile_sorted(sorted, 0.5);
    stats.p10 = percentile_sorted(sorted, 0.1);
    stats.p90 = percentile_sorted(sorted, 0.9);
    return stats;
}

namespace {

std::vector<double> column_from(const SimulationTrace& trace, const std::string& id, int skip) {
    const int col = trace.receiver_index(id);
    if (skip < 0 || skip >= trace.steps()) throw std::invalid_argument("empty evaluation window");
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(trace.steps() - skip));
    for (int step = skip; step < trace.steps(); ++step)
        series.push_back(trace.power_dbm[static_cast<std::size_t>(step)][static_cast<std::size_t>(col)]);
    return series;
}

}  // namespace

StatDeltas compare_traces(const SimulationTrace& baseline, const SimulationTrace& trace,
                          const std::string& receiver_id, int skip_steps) {
    const DbStats base = db_statistics(column_from(baseline, receiver_id, skip_steps));
    const DbStats cur = db_statistics(column_from(trace, receiver_id, skip_steps));
    return StatDeltas{base.mean - cur.mean, base.median - cur.median,
                      base.p10 - cur.p10, base.p90 - cur.p90};
}

}  // namespace risray
