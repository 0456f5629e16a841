#include <doctest.h>

#include <cmath>

#include "risray/config.hpp"
#include "risray/metrics.hpp"
#include "risray/simulation.hpp"

using namespace risray;

TEST_CASE("probe report covers every setting and receiver") {
    const ScenarioConfig cfg = default_config();
    const ProbeReport report = probe_reports(cfg.scene, cfg.propagation);
    REQUIRE(report.settings() == 9);
    REQUIRE(report.receiver_ids == std::vector<std::string>{"A", "B", "C"});
    for (const auto& row : report.power_dbm) REQUIRE(row.size() == 3);
}

TEST_CASE("probe row for angle 0 equals the plain-wall powers") {
    const ScenarioConfig cfg = default_config();
    const ProbeReport report = probe_reports(cfg.scene, cfg.propagation);
    auto walls = cfg.scene.walls;
    walls.push_back(baseline_wall(cfg.scene.ris));
    for (std::size_t i = 0; i < cfg.scene.receivers.size(); ++i) {
        const double plain = received_power(cfg.scene.tx, cfg.scene.receivers[i].position,
                                            walls, cfg.propagation);
        CHECK(std::abs(report.power_dbm[4][i] - plain) < 1e-12);
    }
}

TEST_CASE("single-setting panel gives a 1 x N report") {
    ScenarioConfig cfg = default_config();
    cfg.scene.ris.angle_set_deg = {0.0};
    const ProbeReport report = probe_reports(cfg.scene, cfg.propagation);
    CHECK(report.settings() == 1);
    CHECK(report.power_dbm[0].size() == 3);
}

TEST_CASE("probe-best settings are the ones the context policy holds") {
    const ScenarioConfig cfg = default_config();
    const ProbeReport report = probe_reports(cfg.scene, cfg.propagation);
    const std::vector<Objective> objectives = {
        {"A", Sense::Maximize, cfg.scene.receivers[0].threshold_dbm},
        {"B", Sense::Maximize, cfg.scene.receivers[1].threshold_dbm},
        {"C", Sense::Minimize, cfg.scene.receivers[2].threshold_dbm},
    };
    const RisSchedule s = context_schedule(report, objectives, 9, 1, 12);
    CHECK(s.entries[9] == best_setting(report, objectives[0]));
    CHECK(s.entries[10] == best_setting(report, objectives[1]));
    CHECK(s.entries[11] == best_setting(report, objectives[2]));
}

TEST_CASE("static run is constant and equals the plain-wall powers") {
    const ScenarioConfig cfg = default_config();
    const RisSchedule schedule = static_schedule(4, 9, 2, 4);
    const SimulationTrace trace = run_simulation(cfg.scene, schedule, cfg.propagation);
    REQUIRE(trace.steps() == 8);
    auto walls = cfg.scene.walls;
    walls.push_back(baseline_wall(cfg.scene.ris));
    for (std::size_t i = 0; i < cfg.scene.receivers.size(); ++i) {
        const double plain = received_power(cfg.scene.tx, cfg.scene.receivers[i].position,
                                            walls, cfg.propagation);
        for (int step = 0; step < trace.steps(); ++step)
            CHECK(std::abs(trace.power_dbm[static_cast<std::size_t>(step)][i] - plain) < 1e-12);
    }
}

TEST_CASE("trace factors through the probe matrix") {
    const ScenarioConfig cfg = default_config();
    const ProbeReport report = probe_reports(cfg.scene, cfg.propagation);
    const RisSchedule schedule = sweep_schedule(9, 1, 16);
    const SimulationTrace trace = run_simulation(cfg.scene, schedule, cfg.propagation);
    for (int step = 0; step < trace.steps(); ++step) {
        const int setting = trace.setting_per_step[static_cast<std::size_t>(step)];
        for (std::size_t i = 0; i < trace.receiver_ids.size(); ++i)
            CHECK(std::abs(trace.power_dbm[static_cast<std::size_t>(step)][i] -
                           report.power_dbm[static_cast<std::size_t>(setting)][i]) < 1e-12);
    }
}

TEST_CASE("run rejects schedules for unknown settings") {
    const ScenarioConfig cfg = default_config();
    RisSchedule bad;
    bad.entries = {0, 9};
    CHECK_THROWS_WITH(run_simulation(cfg.scene, bad, cfg.propagation),
                      "schedule references unknown setting");
}

TEST_CASE("trace CSV round-trips") {
    const ScenarioConfig cfg = default_config();
    const SimulationTrace trace =
        run_simulation(cfg.scene, sweep_schedule(9, 2, 8), cfg.propagation);
    const std::string csv = trace_csv(trace);
    CHECK(csv.rfind("step,setting_index,A,B,C\n", 0) == 0);

    const SimulationTrace parsed = parse_trace_csv(csv);
    REQUIRE(parsed.steps() == trace.steps());
    CHECK(parsed.receiver_ids == trace.receiver_ids);
    CHECK(parsed.setting_per_step == trace.setting_per_step);
    for (int step = 0; step < trace.steps(); ++step)
        for (std::size_t i = 0; i < trace.receiver_ids.size(); ++i)
            CHECK(parsed.power_dbm[static_cast<std::size_t>(step)][i] ==
                  doctest::Approx(trace.power_dbm[static_cast<std::size_t>(step)][i]).epsilon(1e-6));

    CHECK_THROWS(parse_trace_csv("bogus\n"));
    CHECK_THROWS(parse_trace_csv("step,setting_index,A\n0,0,notanumber\n"));
}

TEST_CASE("identical runs produce byte-identical CSV") {
    const ScenarioConfig cfg = default_config();
    const RisSchedule schedule = sweep_schedule(9, 1, 32);
    const std::string a = trace_csv(run_simulation(cfg.scene, schedule, cfg.propagation));
    const std::string b = trace_csv(run_simulation(cfg.scene, schedule, cfg.propagation));
    CHECK(a == b);
}
