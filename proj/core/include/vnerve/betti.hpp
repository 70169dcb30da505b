#ifndef VNERVE_BETTI_HPP
#define VNERVE_BETTI_HPP

#include <optional>
#include <utility>
#include <vector>

#include "vnerve/cell_complex.hpp"
#include "vnerve/cycles.hpp"
#include "vnerve/disks.hpp"
#include "vnerve/nerves.hpp"

namespace vnerve {

/// Cell-count / cycle-count / hole-count Betti numbers plus the derived
/// vortex, vortex-nerve and shape counts. For nerve-context inputs b0 counts
/// the attached edges, b1 the member cycles and b2 the holes; the derived
/// field is set for the matching input kind only.
struct BettiReport {
    int b0 = 0;
    int b1 = 0;
    int b2 = 0;
    std::optional<int> b_vtex;
    std::optional<int> b_vnrv;
    std::optional<int> b_sh;
};

/// Plain complex: b0 = cell count, b1 = distinct cycles (bounded faces plus
/// declared cycles), b2 = hole-flagged cycles.
BettiReport betti_numbers(const CellComplex& E);

/// b_vtex equals the cycle count.
BettiReport betti_numbers(const Vortex& v);

/// b_vnrv = attached edges + member cycles + holes.
BettiReport betti_numbers(const VortexNerve& n);

/// A shape that is not a vortex nerve: one boundary cycle, so b_sh = 1 + b2.
BettiReport betti_numbers(const Shape& s);

/// A vortex-nerve shape inherits the nerve counts: b_sh = b0 + b1 + b2.
BettiReport betti_numbers(const Shape& s, const VortexNerve& backing);

/// Closed-form vortex-nerve Betti count for k intersecting filled cycles,
/// n holes and e attached edges: e + k + n. Throws DomainError for k < 1 or
/// negative counts.
int vnrv_closed_form(int k, int n, int e);

/// Mod-2 homology ranks (h0, h1) of an abstract simplicial complex given by
/// its simplices (vertex-id lists). Faces are completed automatically;
/// simplices with more than 3 vertices raise DomainError.
std::pair<int, int> homology_betti(const std::vector<std::vector<int>>& simplices);

struct UnionBetti {
    int h0 = 0;
    int h1 = 0;
    bool too_coarse = false; // grid likely misses a feature; retry finer
    int resolution = 0;
};

/// Connected-region count and bounded-hole count of the rasterized union of
/// closed disks, via flood fill on a resolution x resolution grid.
UnionBetti union_betti(const std::vector<Disk>& family, int resolution = 512);

} // namespace vnerve

#endif
