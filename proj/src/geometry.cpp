#include "risray/geometry.hpp"

#include <algorithm>

namespace risray {

namespace {
// Below this the ray/segment cross product is treated as parallel.
constexpr double kParallelEps = 1e-15;
// Slack on the segment parameter so endpoint grazing counts deterministically.
constexpr double kParamEps = 1e-12;
}  // namespace

std::optional<RayHit> intersect_ray_segment(const Ray& ray, const Segment& seg) {
    const Vec2 r = ray.direction;
    const Vec2 s = seg.delta();
    const double denom = r.cross(s);
    if (std::abs(denom) < kParallelEps) return std::nullopt;
    const Vec2 qp = seg.a - ray.origin;
    const double t = qp.cross(s) / denom;  // distance along the ray (|r| = 1)
    const double u = qp.cross(r) / denom;  // parameter on the segment
    if (t <= kGeomEps) return std::nullopt;
    if (u < -kParamEps || u > 1.0 + kParamEps) return std::nullopt;
    return RayHit{ray.origin + r * t, t};
}

std::optional<double> intersect_segment_segment(Point2 p, Point2 q, const Segment& seg) {
    const Vec2 r = q - p;
    const Vec2 s = seg.delta();
    const double denom = r.cross(s);
    if (std::abs(denom) < kParallelEps) return std::nullopt;
    const Vec2 qp = seg.a - p;
    const double t = qp.cross(s) / denom;
    const double u = qp.cross(r) / denom;
    if (t < -kParamEps || t > 1.0 + kParamEps) return std::nullopt;
    if (u < -kParamEps || u > 1.0 + kParamEps) return std::nullopt;
    return t;
}

Point2 mirror_point(Point2 p, const Segment& line_through) {
    const Vec2 d = line_through.delta();
    const double t = (p - line_through.a).dot(d) / d.dot(d);
    const Point2 foot = line_through.a + d * t;
    return foot * 2.0 - p;
}

Vec2 reflect_direction(Vec2 d, Vec2 n) {
    return d - n * (2.0 * d.dot(n));
}

bool is_visible(Point2 p, Point2 q, std::span<const Segment> occluders,
                std::span<const std::size_t> skip) {
    const double len = distance(p, q);
    for (std::size_t i = 0; i < occluders.size(); ++i) {
        if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
        const auto t = intersect_segment_segment(p, q, occluders[i]);
        if (!t) continue;
        const double d = *t * len;
        if (d < kGeomEps || len - d < kGeomEps) continue;  // endpoint grazing at p or q
        return false;
    }
    return true;
}

double point_segment_distance(Point2 p, const Segment& seg) {
    const Vec2 d = seg.delta();
    const double t = std::clamp((p - seg.a).dot(d) / d.dot(d), 0.0, 1.0);
    return distance(p, seg.a + d * t);
}

}  // namespace risray
