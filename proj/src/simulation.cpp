#include "risray/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace risray {

int SimulationTrace::receiver_index(const std::string& id) const {
    const auto it = std::find(receiver_ids.begin(), receiver_ids.end(), id);
    if (it == receiver_ids.end()) throw std::invalid_argument("unknown receiver id");
    return static_cast<int>(it - receiver_ids.begin());
}

namespace {

// Scene walls plus the RIS segment for one setting.
std::vector<Wall> walls_with_setting(const Scene& scene, int setting_index) {
    std::vector<Wall> walls = scene.walls;
    walls.push_back(ris_segment(scene.ris, setting_index));
    return walls;
}

std::vector<double> receiver_powers(const Scene& scene, std::span<const Wall> walls,
                                    const PropagationParams& params) {
    std::vector<double> powers;
    powers.reserve(scene.receivers.size());
    for (const Receiver& rx : scene.receivers)
        powers.push_back(received_power(scene.tx, rx.position, walls, params));
    return powers;
}

}  // namespace

ProbeReport probe_reports(const Scene& scene, const PropagationParams& params) {
    ProbeReport report;
    for (const Receiver& rx : scene.receivers) report.receiver_ids.push_back(rx.id);
    const int n = setting_count(scene.ris);
    report.power_dbm.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int s = 0; s < n; ++s) {
        const auto walls = walls_with_setting(scene, s);
        report.power_dbm[static_cast<std::size_t>(s)] = receiver_powers(scene, walls, params);
    }
    return report;
}

SimulationTrace run_simulation(const Scene& scene, const RisSchedule& schedule,
                               const PropagationParams& params) {
    const int n_settings = setting_count(scene.ris);
    for (int e : schedule.entries)
        if (e < 0 || e >= n_settings)
            throw std::out_of_range("schedule references unknown setting");

    const int n_intervals = static_cast<int>(schedule.entries.size());
    std::vector<std::vector<double>> interval_powers(static_cast<std::size_t>(n_intervals));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_intervals; ++i) {
        const auto walls = walls_with_setting(scene, schedule.entries[static_cast<std::size_t>(i)]);
        interval_powers[static_cast<std::size_t>(i)] = receiver_powers(scene, walls, params);
    }

    SimulationTrace trace;
    for (const Receiver& rx : scene.receivers) trace.receiver_ids.push_back(rx.id);
    trace.setting_per_step.reserve(static_cast<std::size_t>(schedule.total_steps()));
    trace.power_dbm.reserve(static_cast<std::size_t>(schedule.total_steps()));
    for (int i = 0; i < n_intervals; ++i) {
        for (int d = 0; d < schedule.dwell_steps; ++d) {
            trace.setting_per_step.push_back(schedule.entries[static_cast<std::size_t>(i)]);
            trace.power_dbm.push_back(interval_powers[static_cast<std::size_t>(i)]);
        }
    }
    return trace;
}

std::string trace_csv(const SimulationTrace& trace) {
    std::string out = "step,setting_index";
    for (const std::string& id : trace.receiver_ids) out += "," + id;
    out += "\n";
    char buf[64];
    for (int step = 0; step < trace.steps(); ++step) {
        std::snprintf(buf, sizeof(buf), "%d,%d", step, trace.setting_per_step[static_cast<std::size_t>(step)]);
        out += buf;
        for (double p : trace.power_dbm[static_cast<std::size_t>(step)]) {
            std::snprintf(buf, sizeof(buf), ",%.6f", p);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

SimulationTrace parse_trace_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file");

    SimulationTrace trace;
    {
        std::istringstream header(line);
        std::string field;
        if (!std::getline(header, field, ',') || field != "step")
            throw std::runtime_error("malformed trace header");
        if (!std::getline(header, field, ',') || field != "setting_index")
            throw std::runtime_error("malformed trace header");
        while (std::getline(header, field, ',')) trace.receiver_ids.push_back(field);
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != trace.receiver_ids.size() + 2)
            throw std::runtime_error("trace line " + std::to_string(lineno) + ": wrong field count");
        try {
            trace.setting_per_step.push_back(std::stoi(fields[1]));
            std::vector<double> powers;
            for (std::size_t i = 2; i < fields.size(); ++i) powers.push_back(std::stod(fields[i]));
            trace.power_dbm.push_back(std::move(powers));
        } catch (const std::exception&) {
            throw std::runtime_error("trace line " + std::to_string(lineno) + ": bad number");
        }
    }
    return trace;
}

}  // namespace risray
