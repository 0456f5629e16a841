#pragma once
/**
 * @file geometry.hpp
 * @brief Exact 2D primitives for the image-source propagation engine:
 *        points, segments, rays, intersection, mirroring, specular reflection
 *        and visibility testing. All functions are pure and thread-safe.
 */

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

namespace risray {

/// Self-hit / endpoint tolerance in meters. Far below scene scale, far above
/// double rounding; keeps a reflected ray from re-hitting its own bounce wall.
inline constexpr double kGeomEps = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    /// 2D cross product (z-component of the 3D cross).
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

using Point2 = Vec2;

inline double distance(Point2 a, Point2 b) { return (b - a).norm(); }

/// Directed segment from a to b; invariant a != b.
struct Segment {
    Point2 a;
    Point2 b;

    constexpr Vec2 delta() const { return b - a; }
    double length() const { return delta().norm(); }
};

/// Half-line; direction must be unit length (|d| = 1 within 1e-12).
struct Ray {
    Point2 origin;
    Vec2 direction;
};

struct RayHit {
    Point2 point;
    double distance = 0.0;  ///< meters along the ray from its origin
};

/// First crossing of the ray with the segment (endpoints included), if the
/// hit lies strictly beyond kGeomEps along the ray. Parallel or collinear
/// configurations report no hit.
std::optional<RayHit> intersect_ray_segment(const Ray& ray, const Segment& seg);

/// Crossing point of the open segment (p,q) with `seg`, as a parameter
/// t in [0,1] along p->q. Endpoint grazing on `seg` counts as a crossing.
std::optional<double> intersect_segment_segment(Point2 p, Point2 q, const Segment& seg);

/// Reflection of p across the infinite line containing `line_through`.
/// Involution: mirror(mirror(p)) == p within 1e-12 m.
Point2 mirror_point(Point2 p, const Segment& line_through);

/// Specular reflection r = d - 2(d.n)n of unit direction d about unit normal n.
Vec2 reflect_direction(Vec2 d, Vec2 n);

/// True iff the open segment (p,q) crosses no occluder outside `skip`.
/// Crossings within kGeomEps of either endpoint are ignored, so a bounce
/// point sitting exactly on its wall does not occlude its own legs.
bool is_visible(Point2 p, Point2 q, std::span<const Segment> occluders,
                std::span<const std::size_t> skip = {});

/// Shortest distance from p to the finite segment.
double point_segment_distance(Point2 p, const Segment& seg);

}  // namespace risray
