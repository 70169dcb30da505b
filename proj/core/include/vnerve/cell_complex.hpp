#ifndef VNERVE_CELL_COMPLEX_HPP
#define VNERVE_CELL_COMPLEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "vnerve/cycles.hpp"
#include "vnerve/geometry.hpp"
#include "vnerve/report.hpp"

namespace vnerve {

struct Vertex {
    int id = 0;
    double x = 0.0;
    double y = 0.0;

    Point pos() const { return {x, y}; }
};

/// Bidirectional 1-cell; endpoints are stored normalized (a < b) so that
/// (a,b) and (b,a) denote the same cell.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    auto operator<=>(const Edge&) const = default;
};

/// Filled 2-cell; corners stored sorted.
struct Triangle {
    std::array<int, 3> corners{};

    Triangle() = default;
    Triangle(int u, int v, int w);
    auto operator<=>(const Triangle&) const = default;
};

/// An arbitrary sub-collection of cells of some complex, not necessarily
/// closed under face incidence. Input to closure().
struct CellSet {
    std::set<int> vertices;
    std::set<Edge> edges;
    std::set<Triangle> triangles;

    bool empty() const { return vertices.empty() && edges.empty() && triangles.empty(); }
};

/// A planar embedded cell complex: vertices, bidirectional edges and filled
/// triangles, closed under face incidence, with optional cycle annotations.
///
/// Instances are immutable after construction and safe to share across
/// threads. build() enforces every structural invariant: unique ids,
/// geometrically distinct vertices, face closure, and a crossing-free
/// straight-line embedding.
class CellComplex {
public:
    CellComplex() = default;

    static CellComplex build(std::vector<Vertex> vertices,
                             std::vector<std::array<int, 2>> edges,
                             std::vector<std::array<int, 3>> triangles,
                             std::vector<FilledCycle> declared_cycles = {},
                             std::vector<std::array<int, 2>> attached_edges = {},
                             double tolerance = kDefaultTolerance);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const std::vector<FilledCycle>& declared_cycles() const { return declared_cycles_; }
    const std::vector<Edge>& attached_edges() const { return attached_edges_; }
    double tolerance() const { return tolerance_; }

    bool empty() const { return vertices_.empty(); }
    std::size_t cell_count() const {
        return vertices_.size() + edges_.size() + triangles_.size();
    }

    bool has_vertex(int id) const;
    bool has_edge(Edge e) const;
    bool has_triangle(const Triangle& t) const;

    /// Coordinates of a vertex; throws MalformedComplexError on unknown ids.
    Point position(int id) const;
    std::vector<Point> polyline(const std::vector<int>& ids) const;

    CellSet all_cells() const;

    /// Cell-structure equality (ids, coordinates within tolerance, edges,
    /// triangles). Cycle annotations are ignored.
    bool same_cells(const CellComplex& other) const;

private:
    std::vector<Vertex> vertices_;       // sorted by id
    std::vector<Edge> edges_;            // sorted
    std::vector<Triangle> triangles_;    // sorted
    std::vector<FilledCycle> declared_cycles_;
    std::vector<Edge> attached_edges_;
    double tolerance_ = kDefaultTolerance;
};

/// Completes `cells` with all boundary faces of its members, materialized
/// against `space` (which supplies coordinates). Throws MalformedComplexError
/// when a cell references nothing in `space`.
CellComplex closure(const CellComplex& space, const CellSet& cells);

/// A complex is already closed; returns a copy (kept for symmetry with the
/// sub-collection overload).
CellComplex closure(const CellComplex& E);

/// Cells of E incident to the unbounded face of the embedding. 2-cells are
/// never boundary cells. Empty complexes have empty boundaries.
CellComplex boundary(const CellComplex& E);

/// closure(E) minus boundary(E), as a sub-collection: the interior need not
/// be closed under face incidence (a filled triangle's interior is the bare
/// 2-cell).
CellSet interior(const CellComplex& E);

/// Cells common to A and B. Both complexes must agree on the coordinates of
/// every shared vertex id; otherwise IncompatibleSpaceError.
CellComplex complex_intersection(const CellComplex& A, const CellComplex& B);

/// Checks the containment condition (each member's closure is a member) and
/// the intersection condition (each nonempty pairwise intersection is a
/// member) for a collection. Violations become report entries.
/// Empty pairwise intersections are vacuously fine: disjoint members impose
/// no membership obligation.
ConditionReport check_cw_conditions(const std::vector<CellComplex>& K);

/// Number of connected components (isolated vertices count).
int connected_components(const CellComplex& E);

} // namespace vnerve

#endif
