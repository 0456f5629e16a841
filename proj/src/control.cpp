#include "risray/control.hpp"

#include <algorithm>
#include <stdexcept>

namespace risray {

int ProbeReport::receiver_index(const std::string& id) const {
    const auto it = std::find(receiver_ids.begin(), receiver_ids.end(), id);
    if (it == receiver_ids.end()) throw std::invalid_argument("unknown receiver id");
    return static_cast<int>(it - receiver_ids.begin());
}

RisSchedule static_schedule(int setting_index, int n_settings, int dwell_steps, int n_intervals) {
    if (setting_index < 0 || setting_index >= n_settings)
        throw std::out_of_range("unknown RIS setting");
    if (dwell_steps < 1 || n_intervals < 1)
        throw std::invalid_argument("dwell and interval counts must be positive");
    RisSchedule s;
    s.dwell_steps = dwell_steps;
    s.entries.assign(static_cast<std::size_t>(n_intervals), setting_index);
    return s;
}

RisSchedule sweep_schedule(int n_settings, int dwell_steps, int n_intervals) {
    if (n_settings < 1) throw std::invalid_argument("need at least one setting");
    if (dwell_steps < 1 || n_intervals < 1)
        throw std::invalid_argument("dwell and interval counts must be positive");
    RisSchedule s;
    s.dwell_steps = dwell_steps;
    s.entries.reserve(static_cast<std::size_t>(n_intervals));
    const int period = (n_settings == 1) ? 1 : 2 * (n_settings - 1);
    for (int i = 0; i < n_intervals; ++i) {
        const int k = i % period;
        s.entries.push_back(k < n_settings ? k : period - k);
    }
    return s;
}

int best_setting(const ProbeReport& report, const Objective& objective) {
    const int col = report.receiver_index(objective.receiver_id);
    int best = 0;
    for (int row = 1; row < report.settings(); ++row) {
        const double p = report.power_dbm[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        const double b = report.power_dbm[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)];
        const bool better = (objective.sense == Sense::Maximize) ? (p > b) : (p < b);
        if (better) best = row;  // ties keep the lowest index
    }
    return best;
}

RisSchedule context_schedule(const ProbeReport& report, std::span<const Objective> objectives,
                             int n_settings, int dwell_steps, int n_intervals) {
    if (objectives.empty()) throw std::invalid_argument("no objectives");
    if (n_intervals < n_settings) throw std::invalid_argument("horizon shorter than probe phase");
    RisSchedule s;
    s.dwell_steps = dwell_steps;
    s.entries.reserve(static_cast<std::size_t>(n_intervals));
    for (int i = 0; i < n_settings; ++i) s.entries.push_back(i);  // probe phase

    std::vector<int> bests;
    for (const Objective& o : objectives) {
        const int b = best_setting(report, o);
        if (std::find(bests.begin(), bests.end(), b) == bests.end()) bests.push_back(b);
    }
    for (int i = n_settings; i < n_intervals; ++i)
        s.entries.push_back(bests[static_cast<std::size_t>(i - n_settings) % bests.size()]);
    return s;
}

}  // namespace risray
