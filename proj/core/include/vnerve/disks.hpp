#ifndef VNERVE_DISKS_HPP
#define VNERVE_DISKS_HPP

#include <optional>
#include <vector>

#include "vnerve/geometry.hpp"

namespace vnerve {

/// Closed disk in the plane; the convex region for nerve/union comparisons.
struct Disk {
    Point center{};
    double radius = 0.0;

    bool contains(Point p, double tol = kDefaultTolerance) const {
        return dist(p, center) <= radius + tol;
    }
};

/// A point lying in every disk, when one exists. Exact up to tolerance: a
/// nonempty intersection of closed disks contains a disk center or a
/// boundary-circle crossing point of some pair.
std::optional<Point> disks_common_point(const std::vector<Disk>& disks,
                                        double tol = kDefaultTolerance);

/// Both intersection points of two circles (may coincide at tangency).
std::vector<Point> circle_crossings(const Disk& a, const Disk& b);

} // namespace vnerve

#endif
