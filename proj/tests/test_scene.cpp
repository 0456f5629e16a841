#include <doctest.h>

#include <cmath>
#include <random>

#include "risray/config.hpp"
#include "risray/scene.hpp"

using namespace risray;

namespace {

RisPanel test_panel() {
    return RisPanel{{20, 4}, 2.0, 90.0, default_angle_set(), 1.0};
}

}  // namespace

TEST_CASE("ris_segment at angle 0 is the vertical base segment") {
    const Wall w = ris_segment(test_panel(), 4);  // angle 0 in the default set
    CHECK(w.segment.a.x == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(w.segment.a.y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(w.segment.b.x == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(w.segment.b.y == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(w.reflection_loss_db == doctest::Approx(1.0));
}

TEST_CASE("ris_segment at +20 degrees matches the rotation matrix") {
    const Wall w = ris_segment(test_panel(), 8);  // +20 degrees
    const double s = std::sin(20.0 * 3.14159265358979323846 / 180.0);
    const double c = std::cos(20.0 * 3.14159265358979323846 / 180.0);
    // endpoints pivot -/+ half_length * (cos110, sin110) = (-sin20, cos20)
    CHECK(w.segment.a.x == doctest::Approx(20.0 + 2.0 * s));
    CHECK(w.segment.a.y == doctest::Approx(4.0 - 2.0 * c));
    CHECK(w.segment.b.x == doctest::Approx(20.0 - 2.0 * s));
    CHECK(w.segment.b.y == doctest::Approx(4.0 + 2.0 * c));
}

TEST_CASE("ris_segment rejects out-of-range settings") {
    CHECK_THROWS_WITH(ris_segment(test_panel(), 9), "unknown RIS setting");
    CHECK_THROWS_WITH(ris_segment(test_panel(), -1), "unknown RIS setting");
}

TEST_CASE("setting_count") {
    CHECK(setting_count(test_panel()) == 9);
    RisPanel single = test_panel();
    single.angle_set_deg = {0.0};
    CHECK(setting_count(single) == 1);
    single.angle_set_deg = {-10.0, 0.0, 10.0};
    CHECK(setting_count(single) == 3);
}

TEST_CASE("ris_segment preserves length and pivot midpoint for every setting") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_real_distribution<double> len(0.1, 5.0);
    std::uniform_real_distribution<double> orient(0.0, 360.0);
    for (int trial = 0; trial < 200; ++trial) {
        RisPanel panel{{coord(rng), coord(rng)}, len(rng), orient(rng), default_angle_set(), 1.0};
        for (int i = 0; i < setting_count(panel); ++i) {
            const Wall w = ris_segment(panel, i);
            CHECK(std::abs(w.segment.length() - 2.0 * panel.half_length) < 1e-12 * 10.0);
            const Point2 mid = (w.segment.a + w.segment.b) * 0.5;
            CHECK(distance(mid, panel.pivot) < 1e-12 * 10.0);
        }
    }
}

TEST_CASE("baseline wall equals the angle-0 setting") {
    const RisPanel panel = test_panel();
    const Wall base = baseline_wall(panel);
    const Wall zero = ris_segment(panel, 4);
    CHECK(distance(base.segment.a, zero.segment.a) < 1e-12);
    CHECK(distance(base.segment.b, zero.segment.b) < 1e-12);
}

TEST_CASE("validate_scene") {
    ScenarioConfig cfg = default_config();
    CHECK(validate_scene(cfg.scene).empty());

    SUBCASE("receiver outside bounds") {
        cfg.scene.receivers[0].position = {-1, -1};
        const auto v = validate_scene(cfg.scene);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("outside bounds") != std::string::npos);
    }
    SUBCASE("duplicate receiver id") {
        cfg.scene.receivers[1].id = "A";
        const auto v = validate_scene(cfg.scene);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("duplicate receiver id") != std::string::npos);
    }
    SUBCASE("no receivers") {
        cfg.scene.receivers.clear();
        CHECK_FALSE(validate_scene(cfg.scene).empty());
    }
    SUBCASE("non-increasing angle set") {
        cfg.scene.ris.angle_set_deg = {0.0, 0.0};
        CHECK_FALSE(validate_scene(cfg.scene).empty());
    }
}
