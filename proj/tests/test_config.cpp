#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "risray/config.hpp"

using namespace risray;

TEST_CASE("empty text yields the full reference scenario") {
    const ScenarioConfig cfg = parse_scenario("");
    const ScenarioConfig def = default_config();
    CHECK(cfg.scene.walls.size() == def.scene.walls.size());
    CHECK(cfg.scene.receivers.size() == 3);
    CHECK(cfg.scene.tx.power_dbm == doctest::Approx(20.0));
    CHECK(cfg.scene.tx.frequency_hz == doctest::Approx(3.5e9));
    CHECK(setting_count(cfg.scene.ris) == 9);
    CHECK(cfg.propagation.max_order == 3);
    CHECK(validate_scene(cfg.scene).empty());
}

TEST_CASE("single override keeps everything else at defaults") {
    const ScenarioConfig cfg = parse_scenario("[scene]\ntx.power_dbm = 10\n");
    const ScenarioConfig def = default_config();
    CHECK(cfg.scene.tx.power_dbm == doctest::Approx(10.0));
    CHECK(cfg.scene.tx.frequency_hz == doctest::Approx(def.scene.tx.frequency_hz));
    CHECK(cfg.scene.walls.size() == def.scene.walls.size());
    CHECK(cfg.scene.receivers.size() == def.scene.receivers.size());
}

TEST_CASE("angle range syntax expands to the 9-setting panel") {
    const ScenarioConfig cfg = parse_scenario("[scene]\nris.angles = -20:20:5\n");
    REQUIRE(setting_count(cfg.scene.ris) == 9);
    CHECK(cfg.scene.ris.angle_set_deg.front() == doctest::Approx(-20.0));
    CHECK(cfg.scene.ris.angle_set_deg.back() == doctest::Approx(20.0));
}

TEST_CASE("wall and receiver lines replace the default lists") {
    const std::string text =
        "[scene]\n"
        "bounds = 0,0,10,10\n"
        "wall = 0,0,10,0,6\n"
        "tx.position = 1,1\n"
        "ris.pivot = 9,5\n"
        "receiver = R1,5,5,subscriber,-70\n";
    const ScenarioConfig cfg = parse_scenario(text);
    REQUIRE(cfg.scene.walls.size() == 1);
    CHECK(cfg.scene.walls[0].reflection_loss_db == doctest::Approx(6.0));
    REQUIRE(cfg.scene.receivers.size() == 1);
    CHECK(cfg.scene.receivers[0].id == "R1");
    CHECK(cfg.scene.receivers[0].role == ReceiverRole::Subscriber);
}

TEST_CASE("missing file") {
    CHECK_THROWS_WITH(load_scenario("/nonexistent/risray.ini"),
                      "config not found: /nonexistent/risray.ini");
}

TEST_CASE("malformed lines report their line number") {
    CHECK_THROWS_WITH(parse_scenario("[scene]\nbounds 0,0,1,1\n", "f.ini"),
                      doctest::Contains("f.ini:2"));
    CHECK_THROWS_WITH(parse_scenario("[scene]\ntx.power_dbm = lots\n", "f.ini"),
                      doctest::Contains("not a number"));
    CHECK_THROWS_WITH(parse_scenario("[bogus]\n", "f.ini"), doctest::Contains("unknown section"));
    CHECK_THROWS_WITH(parse_scenario("key = 1\n", "f.ini"), doctest::Contains("outside any section"));
}

TEST_CASE("invariant violations are aggregated") {
    const std::string text =
        "[scene]\n"
        "receiver = A,1,1,detector,-60\n"
        "receiver = A,30,30,victim,-60\n";
    try {
        parse_scenario(text, "f.ini");
        FAIL("expected validation failure");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("duplicate receiver id") != std::string::npos);
        CHECK(msg.find("outside bounds") != std::string::npos);
    }
}

TEST_CASE("dump_config round-trips to an identical config") {
    ScenarioConfig cfg = default_config();
    cfg.scene.tx.power_dbm = 17.25;
    cfg.simulation.policy = "context";
    cfg.simulation.intervals = 33;
    const ScenarioConfig back = parse_scenario(dump_config(cfg));

    CHECK(back.scene.tx.power_dbm == cfg.scene.tx.power_dbm);
    CHECK(back.scene.tx.frequency_hz == cfg.scene.tx.frequency_hz);
    REQUIRE(back.scene.walls.size() == cfg.scene.walls.size());
    for (std::size_t i = 0; i < cfg.scene.walls.size(); ++i) {
        CHECK(back.scene.walls[i].segment.a.x == cfg.scene.walls[i].segment.a.x);
        CHECK(back.scene.walls[i].segment.b.y == cfg.scene.walls[i].segment.b.y);
        CHECK(back.scene.walls[i].reflection_loss_db == cfg.scene.walls[i].reflection_loss_db);
    }
    REQUIRE(back.scene.receivers.size() == cfg.scene.receivers.size());
    for (std::size_t i = 0; i < cfg.scene.receivers.size(); ++i) {
        CHECK(back.scene.receivers[i].id == cfg.scene.receivers[i].id);
        CHECK(back.scene.receivers[i].role == cfg.scene.receivers[i].role);
        CHECK(back.scene.receivers[i].threshold_dbm == cfg.scene.receivers[i].threshold_dbm);
    }
    CHECK(back.scene.ris.angle_set_deg == cfg.scene.ris.angle_set_deg);
    CHECK(back.propagation.max_order == cfg.propagation.max_order);
    CHECK(back.propagation.power_floor_dbm == cfg.propagation.power_floor_dbm);
    CHECK(back.simulation.policy == cfg.simulation.policy);
    CHECK(back.simulation.intervals == cfg.simulation.intervals);
    CHECK(back.simulation.dwell == cfg.simulation.dwell);
    CHECK(back.simulation.map_resolution == cfg.simulation.map_resolution);

    // and dumping again is byte-stable
    CHECK(dump_config(back) == dump_config(cfg));
}
