#include "vnerve/geometry.hpp"

#include <algorithm>

namespace vnerve {

int orientation(Point a, Point b, Point c, double tol) {
    const double v = cross(b - a, c - a);
    // Scale the tolerance with the segment lengths so the predicate is
    // stable for both unit-box fixtures and larger generated scenes.
    const double scale = std::max({1.0, norm(b - a), norm(c - a)});
    if (v > tol * scale) return 1;
    if (v < -tol * scale) return -1;
    return 0;
}

bool point_on_segment(Point p, Point a, Point b, double tol) {
    if (orientation(a, b, p, tol) != 0) return false;
    return dot(p - a, b - a) >= -tol && dot(p - b, a - b) >= -tol;
}

bool segments_intersect(Point a, Point b, Point c, Point d, double tol) {
    const int o1 = orientation(a, b, c, tol);
    const int o2 = orientation(a, b, d, tol);
    const int o3 = orientation(c, d, a, tol);
    const int o4 = orientation(c, d, b, tol);
    if (o1 != o2 && o3 != o4) return true;
    return point_on_segment(c, a, b, tol) || point_on_segment(d, a, b, tol) ||
           point_on_segment(a, c, d, tol) || point_on_segment(b, c, d, tol);
}

bool segments_cross_properly(Point a, Point b, Point c, Point d, double tol) {
    if (!segments_intersect(a, b, c, d, tol)) return false;
    // Shared endpoints do not count as proper crossings.
    auto is_endpoint_contact = [&](Point p) {
        return (points_coincide(p, a, tol) || points_coincide(p, b, tol)) &&
               (points_coincide(p, c, tol) || points_coincide(p, d, tol));
    };
    const int o1 = orientation(a, b, c, tol);
    const int o2 = orientation(a, b, d, tol);
    const int o3 = orientation(c, d, a, tol);
    const int o4 = orientation(c, d, b, tol);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
        return true; // transversal crossing away from all endpoints
    // Touching configurations: a T-contact (endpoint in the other segment's
    // interior) or collinear overlap is proper; a plain shared endpoint is not.
    for (Point p : {c, d})
        if (point_on_segment(p, a, b, tol) && !is_endpoint_contact(p)) return true;
    for (Point p : {a, b})
        if (point_on_segment(p, c, d, tol) && !is_endpoint_contact(p)) return true;
    // Both contacts are shared endpoints; collinear double-contact means the
    // segments overlap along a stretch.
    if (o1 == 0 && o2 == 0) {
        const bool share_a = points_coincide(a, c, tol) || points_coincide(a, d, tol);
        const bool share_b = points_coincide(b, c, tol) || points_coincide(b, d, tol);
        if (share_a && share_b) return true; // identical segment
    }
    return false;
}

Point segment_crossing_point(Point a, Point b, Point c, Point d) {
    const double denom = cross(b - a, d - c);
    if (denom == 0.0) return a;
    const double t = cross(c - a, d - c) / denom;
    return a + t * (b - a);
}

double signed_area(const std::vector<Point>& walk) {
    double acc = 0.0;
    const size_t n = walk.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = walk[i];
        const Point& q = walk[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    return 0.5 * acc;
}

Containment point_in_polygon(Point p, const std::vector<Point>& poly, double tol) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (n == 1) {
            if (points_coincide(p, a, tol)) return Containment::OnBoundary;
            break;
        }
        if (point_on_segment(p, a, b, tol)) return Containment::OnBoundary;
    }
    if (n < 3) return Containment::Outside;
    // Even-odd crossing count with the half-open rule, so walks that repeat
    // vertices (bridges) are handled consistently.
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xc = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xc) inside = !inside;
        }
    }
    return inside ? Containment::Inside : Containment::Outside;
}

} // namespace vnerve
