#pragma once
/**
 * @file config.hpp
 * @brief Scenario configuration: a flat sectioned key-value file with
 *        documented defaults for every field. The default scenario is the
 *        reference room used throughout the tests.
 *
 * Format: sections `[scene]`, `[propagation]`, `[simulation]`; `key = value`
 * lines; `#` or `;` comments. Walls and receivers are repeated `wall =` /
 * `receiver =` entries; the first occurrence replaces the default list.
 *
 *   [scene]
 *   bounds = 0,0,20,8
 *   wall = 0,0,20,0,12            # ax,ay,bx,by,loss_db
 *   ris.pivot = 20,4
 *   ris.half_length = 2
 *   ris.base_orientation_deg = 90
 *   ris.angles = -20:20:5         # start:stop:step, or a comma list
 *   ris.reflection_loss_db = 1
 *   tx.position = 2,7
 *   tx.power_dbm = 20
 *   tx.frequency_hz = 3.5e9
 *   receiver = A,16,1,detector,-58    # id,x,y,role,threshold_dbm
 *   [propagation]
 *   max_order = 3
 *   power_floor_dbm = -150
 *   [simulation]
 *   policy = static               # static | sweep | context
 *   static_angle_deg = 0
 *   dwell = 1
 *   intervals = 48
 *   map_resolution = 0.1
 */

#include <string>

#include "risray/propagation.hpp"
#include "risray/scene.hpp"

namespace risray {

struct SimulationOptions {
    std::string policy = "static";
    double static_angle_deg = 0.0;  ///< RIS angle held by the static policy
    int dwell = 1;
    int intervals = 48;
    double map_resolution = 0.1;
};

struct ScenarioConfig {
    Scene scene;
    PropagationParams propagation;
    SimulationOptions simulation;
};

/// The reference scenario: a 20 x 8 m room, a partition rising from the floor
/// at x = 8 that shadows the right half, the transmitter high on the left,
/// and a RIS filling the [2,6] aperture of the right wall. Receivers A
/// (detector), B (subscriber) and C (victim) sit in the shadowed region; C is
/// lit by the angle-0 reflection, A and B only by rotated settings.
ScenarioConfig default_config();

/// Parse a config file over the defaults. Throws with "config not found" for
/// a missing file, with a line number for malformed lines, and with the
/// aggregated violation list when the resulting scene is invalid.
ScenarioConfig load_scenario(const std::string& path);

/// Parse config text over the defaults (same rules as load_scenario).
ScenarioConfig parse_scenario(const std::string& text, const std::string& name = "<config>");

/// Emit the full config in the file format; load_scenario on the result
/// reproduces an identical config.
std::string dump_config(const ScenarioConfig& config);

}  // namespace risray
