#pragma once
/**
 * @file scene.hpp
 * @brief Domain model of the simulated world: walls, the rotatable RIS panel,
 *        transmitter and receivers. Scene values are immutable after
 *        construction and safe to share read-only across threads.
 */

#include <string>
#include <vector>

#include "risray/geometry.hpp"

namespace risray {

/// Opaque reflective segment. No transmission through walls.
struct Wall {
    Segment segment;
    double reflection_loss_db = 0.0;  ///< per-bounce loss, >= 0
};

/// Mirror panel rotatable about its pivot through a discrete angle set.
/// Rotation physically moves the segment, changing its occlusion footprint.
struct RisPanel {
    Point2 pivot;
    double half_length = 1.0;               ///< meters, > 0
    double base_orientation_deg = 90.0;     ///< panel direction at setting 0 offset
    std::vector<double> angle_set_deg;      ///< strictly increasing
    double reflection_loss_db = 1.0;
};

/// The default -20..20 degree, 5-degree-step actuation range (9 settings).
std::vector<double> default_angle_set();

struct Transmitter {
    Point2 position;
    double power_dbm = 20.0;
    double frequency_hz = 3.5e9;
};

enum class ReceiverRole { Detector, Subscriber, Victim };

/// Detector/subscriber are satisfied when power >= threshold,
/// victim when power < threshold.
struct Receiver {
    std::string id;
    Point2 position;
    ReceiverRole role = ReceiverRole::Subscriber;
    double threshold_dbm = -60.0;
};

struct Bounds {
    Point2 min;
    Point2 max;

    bool contains(Point2 p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
};

struct Scene {
    Bounds bounds;
    std::vector<Wall> walls;
    RisPanel ris;
    Transmitter tx;
    std::vector<Receiver> receivers;
};

int setting_count(const RisPanel& panel);

/// Wall occupied by the panel at the given setting: endpoints pivot +/-
/// half_length * u with u at angle base_orientation + angle_set[index].
/// Throws std::out_of_range("unknown RIS setting") on a bad index.
Wall ris_segment(const RisPanel& panel, int setting_index);

/// Panel at its base orientation with no angle offset; identical to
/// ris_segment at an angle-0 setting. This is the Scenario-1 plain wall.
Wall baseline_wall(const RisPanel& panel);

/// One human-readable violation per broken Scene invariant; empty when valid.
std::vector<std::string> validate_scene(const Scene& scene);

const char* role_name(ReceiverRole role);
ReceiverRole role_from_name(const std::string& name);  // throws on unknown

}  // namespace risray
