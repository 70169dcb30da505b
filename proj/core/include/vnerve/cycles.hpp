#ifndef VNERVE_CYCLES_HPP
#define VNERVE_CYCLES_HPP

#include <string>
#include <vector>

#include "vnerve/geometry.hpp"

namespace vnerve {

class CellComplex;

/// A path-connected closed boundary walk over vertices of a complex.
///
/// Degenerate cycles are legal values: a single vertex (length 1) and a
/// single bidirectional edge (length 2) both count as cycles. "filled"
/// means the enclosed region belongs to the set; "hole" marks an opaque
/// region whose interior contains no cells.
struct FilledCycle {
    std::vector<int> boundary; // vertex ids in cyclic order, length >= 1
    bool filled = true;
    bool hole = false;

    bool degenerate() const { return boundary.size() < 3; }

    /// Rotation/reflection-invariant form, used to deduplicate cycles.
    std::vector<int> canonical_boundary() const;

    bool same_boundary(const FilledCycle& other) const {
        return canonical_boundary() == other.canonical_boundary();
    }
};

/// A single boundary cycle with the holes lying strictly inside it.
struct Shape {
    FilledCycle boundary_cycle;
    std::vector<FilledCycle> interior_holes;
};

/// Strictly nesting filled cycles, innermost first.
struct Vortex {
    std::vector<FilledCycle> cycles;
};

/// All bounded-face boundary cycles of the embedding (leftmost-turn
/// traversal) plus the declared cycles, deduplicated; the unbounded face
/// is excluded. Deterministic order.
std::vector<FilledCycle> find_cycles(const CellComplex& E);

/// Polygon membership for the cycle's boundary in its owning complex.
Containment point_in_cycle(Point p, const FilledCycle& c, const CellComplex& owner);

/// True iff every boundary vertex of `a` lies strictly inside `b`.
bool is_nested(const FilledCycle& a, const FilledCycle& b, const CellComplex& owner);

/// Filled-region semantics: boundaries touch or cross, a boundary cell is
/// shared, or one filled cycle is nested in the other.
bool cycles_intersect(const FilledCycle& a, const FilledCycle& b,
                      const CellComplex& owner);

/// True iff the whole point set of `a` (boundary and filled region) lies in
/// the closed region of `b`. This is the order used to chain degenerate
/// cycles between the polygons they attach to.
bool contained_in_closed_region(const FilledCycle& a, const FilledCycle& b,
                                const CellComplex& owner);

/// Sorts the cycles innermost to outermost. Polygonal cycles must be
/// pairwise strictly nested; degenerate cycles slot into the gap of the
/// innermost polygon whose closed region contains them.
/// Throws NotAVortexError naming the first incomparable pair.
Vortex build_vortex(std::vector<FilledCycle> cycles, const CellComplex& owner);

/// Declared cycles acting as structural members of vortices and nerves:
/// every non-hole cycle, plus hole cycles that are not strictly inside
/// another declared cycle. An opaque top-level region is itself a member;
/// a hole nested in a member's interior is subsidiary and only counted.
std::vector<FilledCycle> member_cycles(const CellComplex& E);

/// The complex must expose exactly one outer boundary cycle; the shape's
/// holes are the hole-flagged declared cycles strictly inside it.
/// Throws NotAShapeError when several outer components exist.
Shape extract_shape(const CellComplex& E);

} // namespace vnerve

#endif
