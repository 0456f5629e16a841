#pragma once
/**
 * @file propagation.hpp
 * @brief Image-source specular ray tracer: enumerates every transmitter-to-
 *        point bounce path up to a bounce limit, applies a free-space link
 *        budget with per-bounce reflection losses, and aggregates received
 *        power incoherently. Also produces power maps over a grid.
 *
 * power_map() is the OpenMP-parallel kernel; power_map_serial() is the serial
 * reference kept for testing. Both produce bit-identical output: every cell
 * is an independent pure computation.
 */

#include <string>
#include <vector>

#include "risray/scene.hpp"

namespace risray {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

enum class Summation { Incoherent };

struct PropagationParams {
    int max_order = 3;               ///< maximum bounces, >= 0
    double power_floor_dbm = -150.0; ///< reported where no path exists; clamp
    Summation summation = Summation::Incoherent;
};

/// One specular bounce path. total_length is the unfolded length, equal to
/// the distance from the final transmitter image to the receive point.
struct PropagationPath {
    std::vector<Point2> bounce_points;
    std::vector<std::size_t> wall_refs;   ///< index into the wall list, per bounce
    double total_length = 0.0;
    double total_reflection_loss_db = 0.0;

    std::size_t order() const { return wall_refs.size(); }
};

/// Free-space path loss 20*log10(4*pi*d*f/c) in dB.
double fspl_db(double distance_m, double frequency_hz);

/// All valid specular paths with 0..max_order bounces from tx to rx.
/// A path is valid when every bounce point lies on its wall's finite segment,
/// every leg is unoccluded, and no wall repeats in consecutive bounces.
std::vector<PropagationPath> enumerate_paths(Point2 tx, Point2 rx,
                                             std::span<const Wall> walls,
                                             const PropagationParams& params);

/// Link budget for one path: tx_power - FSPL(full unfolded length) - bounce
/// losses. Throws std::invalid_argument("degenerate path") when the length
/// is not positive.
double path_power(const PropagationPath& path, double tx_power_dbm, double frequency_hz);

/// Incoherent sum of all path powers in milliwatts, back to dBm, clamped to
/// the floor. The floor is returned when no path exists. Throws
/// std::invalid_argument when the point coincides with the transmitter.
double received_power(const Transmitter& tx, Point2 point,
                      std::span<const Wall> walls, const PropagationParams& params);

struct PowerMap {
    Point2 origin;
    double resolution = 1.0;  ///< meters per cell
    int nx = 0;
    int ny = 0;
    std::vector<double> values;  ///< row-major, ny rows of nx dBm values

    double& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * nx + ix]; }
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
    Point2 cell_center(int ix, int iy) const {
        return {origin.x + (ix + 0.5) * resolution, origin.y + (iy + 0.5) * resolution};
    }
};

/// received_power at every cell center; cells within kGeomEps of the
/// transmitter or of a wall segment report the floor. OpenMP-parallel,
/// bit-identical to power_map_serial for any thread count.
PowerMap power_map(const Transmitter& tx, std::span<const Wall> walls,
                   const Bounds& bounds, double resolution, const PropagationParams& params);

/// Serial reference implementation of power_map.
PowerMap power_map_serial(const Transmitter& tx, std::span<const Wall> walls,
                          const Bounds& bounds, double resolution,
                          const PropagationParams& params);

/// CSV serialization: `# origin_x,origin_y,resolution,nx,ny` header, then ny
/// lines of nx comma-separated dBm values with 6 decimal places.
std::string power_map_csv(const PowerMap& map);

}  // namespace risray
