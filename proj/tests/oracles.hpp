// Independent oracles for the test suites. These deliberately avoid the
// library's own code paths: membership uses winding numbers instead of
// even-odd crossings, nerves use unpruned subset enumeration, descriptive
// intersection uses a direct double loop.

#ifndef VNERVE_TEST_ORACLES_HPP
#define VNERVE_TEST_ORACLES_HPP

#include <cmath>
#include <vector>

#include "vnerve/vnerve.hpp"

namespace oracles {

// Winding-number membership: sums the signed angles subtended by the polygon
// edges. On-boundary points are detected by distance to the segments.
inline vnerve::Containment winding_point_in_polygon(vnerve::Point p,
                                                    const std::vector<vnerve::Point>& poly,
                                                    double tol = 1e-9) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const vnerve::Point a = poly[i];
        const vnerve::Point b = poly[(i + 1) % n];
        const vnerve::Point ab = b - a;
        const vnerve::Point ap = p - a;
        const double len2 = vnerve::dot(ab, ab);
        double t = len2 > 0 ? vnerve::dot(ap, ab) / len2 : 0.0;
        t = std::max(0.0, std::min(1.0, t));
        const vnerve::Point closest = a + t * ab;
        if (vnerve::dist(p, closest) <= tol) return vnerve::Containment::OnBoundary;
    }
    if (n < 3) return vnerve::Containment::Outside;
    double angle = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const vnerve::Point a = poly[i] - p;
        const vnerve::Point b = poly[(i + 1) % n] - p;
        angle += std::atan2(vnerve::cross(a, b), vnerve::dot(a, b));
    }
    return std::abs(angle) > 3.141592653589793
               ? vnerve::Containment::Inside
               : vnerve::Containment::Outside;
}

// Unpruned nerve enumeration over all 2^n - 1 subsets.
inline std::vector<std::vector<int>> brute_force_nerve(
    std::size_t n, const std::function<bool(const std::vector<int>&)>& has_common) {
    std::vector<std::vector<int>> simplices;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(static_cast<int>(i));
        if (has_common(subset)) simplices.push_back(subset);
    }
    std::sort(simplices.begin(), simplices.end());
    return simplices;
}

// Direct double loop: some member of A describes like some member of B.
inline bool brute_force_dnear(const vnerve::Collection& A, const vnerve::Collection& B,
                              const vnerve::Probe& probe, double eps = 1e-9) {
    for (const vnerve::CellComplex& a : A)
        for (const vnerve::CellComplex& b : B)
            if (probe(a).matches(probe(b), eps)) return true;
    return false;
}

// Matched element indices of A ∪ B by the definition, using the same ground
// set the implementation reports, but scanning pairs directly.
inline std::vector<std::size_t> brute_force_descriptive_intersection(
    const vnerve::Collection& elements, const std::vector<bool>& in_a,
    const std::vector<bool>& in_b, const vnerve::Probe& probe, double eps = 1e-9) {
    std::vector<vnerve::FeatureVector> desc;
    desc.reserve(elements.size());
    for (const auto& x : elements) desc.push_back(probe(x));
    std::vector<std::size_t> matched;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool hit_a = false, hit_b = false;
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (in_a[j] && desc[i].matches(desc[j], eps)) hit_a = true;
            if (in_b[j] && desc[i].matches(desc[j], eps)) hit_b = true;
        }
        if (hit_a && hit_b) matched.push_back(i);
    }
    return matched;
}

// Convenience builders.

inline vnerve::CellComplex grid_square(double side = 1.0, vnerve::Point origin = {0, 0},
                                       int first_id = 0, bool hole = false) {
    using namespace vnerve;
    std::vector<Vertex> vs = {
        {first_id + 0, origin.x, origin.y},
        {first_id + 1, origin.x + side, origin.y},
        {first_id + 2, origin.x + side, origin.y + side},
        {first_id + 3, origin.x, origin.y + side},
    };
    std::vector<std::array<int, 2>> es = {{first_id + 0, first_id + 1},
                                          {first_id + 1, first_id + 2},
                                          {first_id + 2, first_id + 3},
                                          {first_id + 3, first_id + 0}};
    FilledCycle cycle;
    cycle.boundary = {first_id + 0, first_id + 1, first_id + 2, first_id + 3};
    cycle.hole = hole;
    return CellComplex::build(vs, es, {}, {cycle});
}

inline vnerve::CellComplex single_triangle(vnerve::Point a = {0, 0},
                                           vnerve::Point b = {1, 0},
                                           vnerve::Point c = {0, 1}) {
    using namespace vnerve;
    return CellComplex::build({{0, a.x, a.y}, {1, b.x, b.y}, {2, c.x, c.y}},
                              {{0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}});
}

inline vnerve::CellComplex regular_polygon(int sides, double radius = 1.0,
                                           vnerve::Point center = {0, 0}) {
    using namespace vnerve;
    std::vector<Vertex> vs;
    std::vector<std::array<int, 2>> es;
    FilledCycle cycle;
    for (int i = 0; i < sides; ++i) {
        const double t = 2.0 * 3.141592653589793 * i / sides;
        vs.push_back({i, center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
        es.push_back({i, (i + 1) % sides});
        cycle.boundary.push_back(i);
    }
    return CellComplex::build(vs, es, {}, {cycle});
}

} // namespace oracles

#endif
