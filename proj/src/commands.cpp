#include "risray/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "risray/metrics.hpp"
#include "risray/simulation.hpp"

#include <json.hpp>

namespace risray::cmd {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

namespace {

int setting_index_for_angle(const RisPanel& panel, double angle_deg) {
    for (int i = 0; i < setting_count(panel); ++i)
        if (std::abs(panel.angle_set_deg[static_cast<std::size_t>(i)] - angle_deg) < 1e-9) return i;
    throw std::invalid_argument("unknown RIS setting");
}

double round6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::stod(buf);
}

std::vector<Objective> objectives_from_roles(const Scene& scene,
                                             const std::vector<std::string>& ids) {
    std::vector<Objective> objectives;
    auto add = [&](const Receiver& rx) {
        const Sense sense = (rx.role == ReceiverRole::Victim) ? Sense::Minimize : Sense::Maximize;
        objectives.push_back({rx.id, sense, rx.threshold_dbm});
    };
    if (ids.empty()) {
        for (const Receiver& rx : scene.receivers) add(rx);
        return objectives;
    }
    for (const std::string& id : ids) {
        bool found = false;
        for (const Receiver& rx : scene.receivers)
            if (rx.id == id) { add(rx); found = true; break; }
        if (!found) throw std::invalid_argument("unknown receiver id: " + id);
    }
    return objectives;
}

}  // namespace

void map(const ScenarioConfig& config, std::optional<double> angle_deg, bool baseline,
         std::optional<double> resolution, const std::string& out_path) {
    if (baseline == angle_deg.has_value())
        throw std::invalid_argument("map needs exactly one of --angle or --baseline");
    std::vector<Wall> walls = config.scene.walls;
    walls.push_back(baseline ? baseline_wall(config.scene.ris)
                             : ris_segment(config.scene.ris,
                                           setting_index_for_angle(config.scene.ris, *angle_deg)));
    const double res = resolution.value_or(config.simulation.map_resolution);
    const PowerMap pm = power_map(config.scene.tx, walls, config.scene.bounds, res,
                                  config.propagation);
    write_file(out_path, power_map_csv(pm));
}

void sweep(const ScenarioConfig& config, const std::string& out_path) {
    const ProbeReport report = probe_reports(config.scene, config.propagation);
    std::string csv = "setting_index,angle_deg";
    for (const std::string& id : report.receiver_ids) csv += "," + id;
    csv += "\n";
    char buf[64];
    for (int s = 0; s < report.settings(); ++s) {
        std::snprintf(buf, sizeof(buf), "%d,%.6f", s,
                      config.scene.ris.angle_set_deg[static_cast<std::size_t>(s)]);
        csv += buf;
        for (double p : report.power_dbm[static_cast<std::size_t>(s)]) {
            std::snprintf(buf, sizeof(buf), ",%.6f", p);
            csv += buf;
        }
        csv += "\n";
    }
    write_file(out_path, csv);
}

void run(const ScenarioConfig& config, const RunOptions& options,
         const std::string& trace_path, const std::string& metrics_path) {
    const Scene& scene = config.scene;
    const std::string policy = options.policy.value_or(config.simulation.policy);
    const int dwell = options.dwell.value_or(config.simulation.dwell);
    const int intervals = options.intervals.value_or(config.simulation.intervals);
    const int n_settings = setting_count(scene.ris);

    RisSchedule schedule;
    int probe_steps = 0;
    if (policy == "static") {
        const int idx = setting_index_for_angle(scene.ris, config.simulation.static_angle_deg);
        schedule = static_schedule(idx, n_settings, dwell, intervals);
    } else if (policy == "sweep") {
        schedule = sweep_schedule(n_settings, dwell, intervals);
    } else if (policy == "context") {
        const ProbeReport report = probe_reports(scene, config.propagation);
        const auto objectives = objectives_from_roles(scene, options.objective_ids);
        schedule = context_schedule(report, objectives, n_settings, dwell, intervals);
        probe_steps = n_settings * dwell;
    } else {
        throw std::invalid_argument("unknown policy: " + policy);
    }

    const SimulationTrace trace = run_simulation(scene, schedule, config.propagation);
    write_file(trace_path, trace_csv(trace));

    nlohmann::ordered_json receivers = nlohmann::ordered_json::array();
    for (const Receiver& rx : scene.receivers) {
        const int col = trace.receiver_index(rx.id);
        std::vector<double> series;
        for (int step = 0; step < trace.steps(); ++step)
            series.push_back(trace.power_dbm[static_cast<std::size_t>(step)][static_cast<std::size_t>(col)]);
        const DbStats stats = db_statistics(series);
        nlohmann::ordered_json entry;
        entry["receiver"] = rx.id;
        entry["satisfaction_fraction"] = round6(satisfaction_fraction(trace, rx, 0));
        entry["satisfaction_fraction_post_probe"] =
            round6(satisfaction_fraction(trace, rx, probe_steps));
        entry["stats"] = {{"mean", round6(stats.mean)},
                          {"median", round6(stats.median)},
                          {"p10", round6(stats.p10)},
                          {"p90", round6(stats.p90)}};
        receivers.push_back(entry);
    }
    nlohmann::ordered_json doc;
    doc["policy"] = policy;
    doc["probe_steps"] = probe_steps;
    doc["receivers"] = receivers;
    write_file(metrics_path, doc.dump(2) + "\n");
}

void compare(const std::string& baseline_path, const std::string& trace_path,
             int skip_steps, const std::string& out_path) {
    const SimulationTrace baseline = parse_trace_csv(read_file(baseline_path));
    const SimulationTrace trace = parse_trace_csv(read_file(trace_path));

    nlohmann::ordered_json receivers = nlohmann::ordered_json::array();
    for (const std::string& id : baseline.receiver_ids) {
        bool in_trace = false;
        for (const std::string& other : trace.receiver_ids)
            if (other == id) { in_trace = true; break; }
        if (!in_trace) continue;
        const StatDeltas d = compare_traces(baseline, trace, id, skip_steps);
        nlohmann::ordered_json entry;
        entry["receiver"] = id;
        entry["deltas"] = {{"mean", round6(d.mean)},
                           {"median", round6(d.median)},
                           {"p10", round6(d.p10)},
                           {"p90", round6(d.p90)}};
        receivers.push_back(entry);
    }
    if (receivers.empty()) throw std::invalid_argument("unknown receiver id");
    nlohmann::ordered_json doc;
    doc["skip_steps"] = skip_steps;
    doc["receivers"] = receivers;
    write_file(out_path, doc.dump(2) + "\n");
}

}  // namespace risray::cmd
