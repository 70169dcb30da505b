#include "vnerve/disks.hpp"

#include <cmath>

namespace vnerve {

std::vector<Point> circle_crossings(const Disk& a, const Disk& b) {
    const double d = dist(a.center, b.center);
    if (d == 0.0) return {};
    if (d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) return {};
    const double alpha =
        (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d);
    const double h2 = a.radius * a.radius - alpha * alpha;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const Point base = a.center + (alpha / d) * (b.center - a.center);
    const Point n{-(b.center.y - a.center.y) / d, (b.center.x - a.center.x) / d};
    return {base + h * n, base - h * n};
}

std::optional<Point> disks_common_point(const std::vector<Disk>& disks, double tol) {
    if (disks.empty()) return std::nullopt;
    // A nonempty intersection of closed disks is convex; its boundary either
    // contains a pairwise circle crossing or is a full circle whose center
    // is a candidate. Centers and crossings together witness every case.
    std::vector<Point> candidates;
    for (const Disk& d : disks) candidates.push_back(d.center);
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            for (const Point& p : circle_crossings(disks[i], disks[j]))
                candidates.push_back(p);
    for (const Point& p : candidates) {
        bool everywhere = true;
        for (const Disk& d : disks)
            if (!d.contains(p, tol)) {
                everywhere = false;
                break;
            }
        if (everywhere) return p;
    }
    return std::nullopt;
}

} // namespace vnerve
