#include "risray/propagation.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace risray {

double fspl_db(double distance_m, double frequency_hz) {
    constexpr double kPi = 3.14159265358979323846;
    return 20.0 * std::log10(4.0 * kPi * distance_m * frequency_hz / kSpeedOfLight);
}

namespace {

struct PathSearch {
    Point2 tx;
    Point2 rx;
    std::span<const Wall> walls;
    int max_order;
    std::vector<Segment> segments;      // wall segments, index-aligned
    std::vector<std::size_t> seq;       // current wall sequence
    std::vector<Point2> images;         // images[k] = tx mirrored across seq[0..k-1]
    std::vector<PropagationPath> out;

    explicit PathSearch(Point2 tx_, Point2 rx_, std::span<const Wall> walls_, int order)
        : tx(tx_), rx(rx_), walls(walls_), max_order(order) {
        segments.reserve(walls.size());
        for (const Wall& w : walls) segments.push_back(w.segment);
        images.push_back(tx);
    }

    // Validate the current sequence by backtracking from rx through the
    // images; emit the path when every bounce lands on its finite wall and
    // every leg is unoccluded.
    void try_emit() {
        const std::size_t k = seq.size();
        Point2 target = rx;
        std::vector<Point2> pts(k);
        for (std::size_t j = k; j-- > 0;) {
            const auto t = intersect_segment_segment(images[j + 1], target, segments[seq[j]]);
            if (!t) return;
            pts[j] = images[j + 1] + (target - images[j + 1]) * *t;
            target = pts[j];
        }
        Point2 prev = tx;
        for (std::size_t j = 0; j <= k; ++j) {
            const Point2 next = (j < k) ? pts[j] : rx;
            if (distance(prev, next) < kGeomEps) return;
            if (!is_visible(prev, next, segments)) return;
            prev = next;
        }
        PropagationPath path;
        path.bounce_points = std::move(pts);
        path.wall_refs.assign(seq.begin(), seq.end());
        path.total_length = distance(images[k], rx);
        for (std::size_t wi : seq) path.total_reflection_loss_db += walls[wi].reflection_loss_db;
        out.push_back(std::move(path));
    }

    void recurse() {
        try_emit();
        if (static_cast<int>(seq.size()) == max_order) return;
        for (std::size_t wi = 0; wi < walls.size(); ++wi) {
            if (!seq.empty() && seq.back() == wi) continue;  // no consecutive repeats
            seq.push_back(wi);
            images.push_back(mirror_point(images.back(), segments[wi]));
            recurse();
            images.pop_back();
            seq.pop_back();
        }
    }
};

}  // namespace

std::vector<PropagationPath> enumerate_paths(Point2 tx, Point2 rx,
                                             std::span<const Wall> walls,
                                             const PropagationParams& params) {
    PathSearch search(tx, rx, walls, params.max_order);
    search.recurse();
    return std::move(search.out);
}

double path_power(const PropagationPath& path, double tx_power_dbm, double frequency_hz) {
    if (path.total_length <= kGeomEps) throw std::invalid_argument("degenerate path");
    return tx_power_dbm - fspl_db(path.total_length, frequency_hz) - path.total_reflection_loss_db;
}

double received_power(const Transmitter& tx, Point2 point,
                      std::span<const Wall> walls, const PropagationParams& params) {
    if (distance(tx.position, point) < kGeomEps)
        throw std::invalid_argument("receiver collocated with transmitter");
    const auto paths = enumerate_paths(tx.position, point, walls, params);
    if (paths.empty()) return params.power_floor_dbm;
    double milliwatts = 0.0;
    for (const PropagationPath& p : paths)
        milliwatts += std::pow(10.0, path_power(p, tx.power_dbm, tx.frequency_hz) / 10.0);
    const double dbm = 10.0 * std::log10(milliwatts);
    return std::max(dbm, params.power_floor_dbm);
}

namespace {

PowerMap make_grid(const Bounds& bounds, double resolution) {
    if (resolution <= 0.0) throw std::invalid_argument("non-positive resolution");
    PowerMap map;
    map.origin = bounds.min;
    map.resolution = resolution;
    map.nx = std::max(1, static_cast<int>(std::ceil((bounds.max.x - bounds.min.x) / resolution - 1e-12)));
    map.ny = std::max(1, static_cast<int>(std::ceil((bounds.max.y - bounds.min.y) / resolution - 1e-12)));
    map.values.assign(static_cast<std::size_t>(map.nx) * map.ny, 0.0);
    return map;
}

double cell_power(const Transmitter& tx, std::span<const Wall> walls,
                  const PropagationParams& params, Point2 center) {
    if (distance(center, tx.position) < kGeomEps) return params.power_floor_dbm;
    for (const Wall& w : walls)
        if (point_segment_distance(center, w.segment) < kGeomEps) return params.power_floor_dbm;
    return received_power(tx, center, walls, params);
}

}  // namespace

PowerMap power_map(const Transmitter& tx, std::span<const Wall> walls,
                   const Bounds& bounds, double resolution, const PropagationParams& params) {
    PowerMap map = make_grid(bounds, resolution);
    const long long n = static_cast<long long>(map.nx) * map.ny;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        const int ix = static_cast<int>(i % map.nx);
        const int iy = static_cast<int>(i / map.nx);
        map.values[static_cast<std::size_t>(i)] =
            cell_power(tx, walls, params, map.cell_center(ix, iy));
    }
    return map;
}

PowerMap power_map_serial(const Transmitter& tx, std::span<const Wall> walls,
                          const Bounds& bounds, double resolution,
                          const PropagationParams& params) {
    PowerMap map = make_grid(bounds, resolution);
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix)
            map.at(ix, iy) = cell_power(tx, walls, params, map.cell_center(ix, iy));
    return map;
}

std::string power_map_csv(const PowerMap& map) {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "# %.6f,%.6f,%.6f,%d,%d\n",
                  map.origin.x, map.origin.y, map.resolution, map.nx, map.ny);
    out += buf;
    for (int iy = 0; iy < map.ny; ++iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            std::snprintf(buf, sizeof(buf), "%.6f", map.at(ix, iy));
            out += buf;
            out += (ix + 1 < map.nx) ? "," : "\n";
        }
    }
    return out;
}

}  // namespace risray
