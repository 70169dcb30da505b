#ifndef VNERVE_GEOMETRY_HPP
#define VNERVE_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace vnerve {

/// Default comparison tolerance for coordinates and predicates.
inline constexpr double kDefaultTolerance = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

inline bool points_coincide(Point a, Point b, double tol = kDefaultTolerance) {
    return dist(a, b) <= tol;
}

/// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear (within tol).
int orientation(Point a, Point b, Point c, double tol = kDefaultTolerance);

/// True if p lies on the closed segment [a, b] within tol.
bool point_on_segment(Point p, Point a, Point b, double tol = kDefaultTolerance);

/// True if the closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d,
                        double tol = kDefaultTolerance);

/// True if the open interiors of [a,b] and [c,d] cross or overlap, i.e. the
/// segments intersect somewhere other than a shared endpoint.
bool segments_cross_properly(Point a, Point b, Point c, Point d,
                             double tol = kDefaultTolerance);

/// Intersection point of two properly crossing segments (valid only when
/// segments_cross_properly holds and the segments are not collinear).
Point segment_crossing_point(Point a, Point b, Point c, Point d);

/// Signed area of a closed polygonal walk (CCW positive). Repeated vertices
/// (bridge traversals) contribute zero net area.
double signed_area(const std::vector<Point>& walk);

enum class Containment { Inside, OnBoundary, Outside };

/// Even-odd membership test with explicit on-boundary detection.
/// Polygons with fewer than 3 vertices classify every off-boundary point
/// as Outside.
Containment point_in_polygon(Point p, const std::vector<Point>& poly,
                             double tol = kDefaultTolerance);

} // namespace vnerve

#endif
