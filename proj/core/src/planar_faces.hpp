#ifndef VNERVE_PLANAR_FACES_HPP
#define VNERVE_PLANAR_FACES_HPP

#include <vector>

#include "vnerve/cell_complex.hpp"

namespace vnerve::detail {

/// One face of the straight-line embedding, traced per connected component.
/// The walk lists vertices in traversal order; bridge edges appear twice
/// (once per direction), so walks need not be simple cycles.
struct FaceWalk {
    std::vector<int> vertices;
    double area = 0.0; // signed; bounded faces are CCW positive
    bool bounded = false;
    int component = 0;
};

/// Leftmost-turn traversal of every face of every component with at least
/// one edge. Components that are trees yield a single unbounded walk.
/// Output order is deterministic.
std::vector<FaceWalk> trace_faces(const CellComplex& E);

/// Component index per vertex id (edges only; isolated vertices get their
/// own component). Deterministic numbering by smallest vertex id.
int component_count(const CellComplex& E, std::vector<int>* labels_by_index = nullptr);

} // namespace vnerve::detail

#endif
