#include "vnerve/cycles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "planar_faces.hpp"
#include "vnerve/cell_complex.hpp"
#include "vnerve/error.hpp"

namespace vnerve {

std::vector<int> FilledCycle::canonical_boundary() const {
    const std::size_t n = boundary.size();
    if (n == 0) return {};
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& seq) {
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<int> rot(n);
            for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(r + i) % n];
            if (best.empty() || rot < best) best = rot;
        }
    };
    consider(boundary);
    std::vector<int> rev(boundary.rbegin(), boundary.rend());
    consider(rev);
    return best;
}

namespace {

std::string cycle_str(const FilledCycle& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.boundary.size(); ++i) {
        if (i) os << ",";
        os << c.boundary[i];
    }
    os << "]";
    return os.str();
}

} // namespace

std::vector<FilledCycle> find_cycles(const CellComplex& E) {
    std::vector<FilledCycle> out;
    std::vector<std::vector<int>> seen;
    auto push_unique = [&](FilledCycle c) {
        auto key = c.canonical_boundary();
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
        seen.push_back(std::move(key));
        out.push_back(std::move(c));
    };
    for (const auto& f : detail::trace_faces(E)) {
        if (!f.bounded) continue;
        FilledCycle c;
        c.boundary = f.vertices;
        push_unique(std::move(c));
    }
    for (const FilledCycle& c : E.declared_cycles()) push_unique(c);
    std::sort(out.begin(), out.end(), [](const FilledCycle& a, const FilledCycle& b) {
        return a.canonical_boundary() < b.canonical_boundary();
    });
    return out;
}

Containment point_in_cycle(Point p, const FilledCycle& c, const CellComplex& owner) {
    return point_in_polygon(p, owner.polyline(c.boundary), owner.tolerance());
}

bool is_nested(const FilledCycle& a, const FilledCycle& b, const CellComplex& owner) {
    if (b.degenerate()) return false; // nothing fits strictly inside a point or edge
    for (int id : a.boundary)
        if (point_in_cycle(owner.position(id), b, owner) != Containment::Inside)
            return false;
    return true;
}

namespace {

// Closed segments making up the boundary walk of a cycle.
std::vector<std::pair<Point, Point>> boundary_segments(const FilledCycle& c,
                                                       const CellComplex& owner) {
    std::vector<std::pair<Point, Point>> segs;
    const std::size_t n = c.boundary.size();
    if (n < 2) return segs;
    const std::size_t steps = (n == 2) ? 1 : n;
    for (std::size_t i = 0; i < steps; ++i)
        segs.emplace_back(owner.position(c.boundary[i]),
                          owner.position(c.boundary[(i + 1) % n]));
    return segs;
}

bool point_in_closed_region(Point p, const FilledCycle& c, const CellComplex& owner) {
    const Containment where = point_in_cycle(p, c, owner);
    if (where == Containment::OnBoundary) return true;
    if (c.degenerate()) return false;
    return c.filled && where == Containment::Inside;
}

} // namespace

bool cycles_intersect(const FilledCycle& a, const FilledCycle& b,
                      const CellComplex& owner) {
    const double tol = owner.tolerance();
    // Shared boundary vertices cover shared cells.
    for (int id : a.boundary)
        if (std::find(b.boundary.begin(), b.boundary.end(), id) != b.boundary.end())
            return true;
    const auto sa = boundary_segments(a, owner);
    const auto sb = boundary_segments(b, owner);
    for (const auto& [p, q] : sa)
        for (const auto& [r, s] : sb)
            if (segments_intersect(p, q, r, s, tol)) return true;
    if (a.boundary.size() == 1 || b.boundary.size() == 1) {
        const FilledCycle& pt = a.boundary.size() == 1 ? a : b;
        const FilledCycle& other = a.boundary.size() == 1 ? b : a;
        return point_in_closed_region(owner.position(pt.boundary.front()), other, owner);
    }
    // No boundary contact: filled semantics make nesting an intersection.
    for (int id : a.boundary)
        if (point_in_closed_region(owner.position(id), b, owner)) return true;
    for (int id : b.boundary)
        if (point_in_closed_region(owner.position(id), a, owner)) return true;
    return false;
}

bool contained_in_closed_region(const FilledCycle& a, const FilledCycle& b,
                                const CellComplex& owner) {
    if (b.degenerate()) {
        // A point or segment region can contain only degenerate cycles whose
        // boundary lies on it.
        if (!a.degenerate()) return false;
        for (int id : a.boundary)
            if (point_in_cycle(owner.position(id), b, owner) != Containment::OnBoundary)
                return false;
        return true;
    }
    for (int id : a.boundary)
        if (point_in_cycle(owner.position(id), b, owner) == Containment::Outside)
            return false;
    // Guard against excursions of a's boundary outside b between vertices.
    const auto sa = boundary_segments(a, owner);
    const auto sb = boundary_segments(b, owner);
    for (const auto& [p, q] : sa)
        for (const auto& [r, s] : sb)
            if (segments_cross_properly(p, q, r, s, owner.tolerance())) return false;
    return true;
}

Vortex build_vortex(std::vector<FilledCycle> cycles, const CellComplex& owner) {
    if (cycles.empty()) throw NotAVortexError("empty cycle list");

    std::vector<std::size_t> polys, degens;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        (cycles[i].degenerate() ? degens : polys).push_back(i);

    // Polygonal cycles must form a strict nesting chain.
    for (std::size_t i : polys)
        for (std::size_t j : polys) {
            if (i >= j) continue;
            if (!is_nested(cycles[i], cycles[j], owner) &&
                !is_nested(cycles[j], cycles[i], owner))
                throw NotAVortexError("cycles " + cycle_str(cycles[i]) + " and " +
                                      cycle_str(cycles[j]) + " are not nested");
        }
    // Degenerate cycles must sit inside the chain somewhere.
    for (std::size_t d : degens) {
        if (polys.empty() && degens.size() > 1)
            throw NotAVortexError("degenerate cycles " + cycle_str(cycles[d]) +
                                  " cannot nest without a surrounding cycle");
    }

    // Depth = number of polygonal cycles whose closed region contains the
    // cycle. Innermost cells have the greatest depth; at equal depth the
    // polygon precedes the degenerate cycles attached to its boundary.
    struct Keyed {
        int depth;
        int degenerate;
        std::vector<int> canon;
        std::size_t index;
    };
    std::vector<Keyed> keyed;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        int depth = 0;
        for (std::size_t p : polys) {
            if (p == i) continue;
            if (contained_in_closed_region(cycles[i], cycles[p], owner)) ++depth;
        }
        keyed.push_back({depth, cycles[i].degenerate() ? 1 : 0,
                         cycles[i].canonical_boundary(), i});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.depth != b.depth) return a.depth > b.depth;
        if (a.degenerate != b.degenerate) return a.degenerate < b.degenerate;
        return a.canon < b.canon;
    });

    Vortex v;
    for (const Keyed& k : keyed) v.cycles.push_back(cycles[k.index]);
    return v;
}

std::vector<FilledCycle> member_cycles(const CellComplex& E) {
    const auto& declared = E.declared_cycles();
    std::vector<FilledCycle> members;
    for (std::size_t i = 0; i < declared.size(); ++i) {
        bool subsidiary = false;
        if (declared[i].hole) {
            for (std::size_t j = 0; j < declared.size() && !subsidiary; ++j)
                if (i != j && is_nested(declared[i], declared[j], E)) subsidiary = true;
        }
        if (!subsidiary) members.push_back(declared[i]);
    }
    return members;
}

Shape extract_shape(const CellComplex& E) {
    const auto faces = detail::trace_faces(E);
    // Outer walks that are not enclosed by a bounded face of another
    // component are pieces of the global boundary.
    std::vector<detail::FaceWalk> outers;
    for (const auto& f : faces) {
        if (f.bounded) continue;
        const Point probe = E.position(f.vertices.front());
        bool enclosed = false;
        for (const auto& g : faces) {
            if (!g.bounded || g.component == f.component) continue;
            if (point_in_polygon(probe, E.polyline(g.vertices), E.tolerance()) ==
                Containment::Inside) {
                enclosed = true;
                break;
            }
        }
        if (!enclosed) outers.push_back(f);
    }
    if (outers.empty()) throw NotAShapeError("complex has no boundary cycle");
    if (outers.size() > 1)
        throw NotAShapeError("complex has " + std::to_string(outers.size()) +
                             " outer components");

    Shape sh;
    sh.boundary_cycle.boundary = outers.front().vertices;
    // A boundary walk with repeated vertices is not a single cycle.
    std::vector<int> sorted = sh.boundary_cycle.boundary;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotAShapeError("outer boundary is not a simple cycle");

    for (const FilledCycle& c : E.declared_cycles()) {
        if (!c.hole) continue;
        if (is_nested(c, sh.boundary_cycle, E)) sh.interior_holes.push_back(c);
    }
    return sh;
}

} // namespace vnerve
