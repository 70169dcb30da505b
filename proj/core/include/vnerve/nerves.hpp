#ifndef VNERVE_NERVES_HPP
#define VNERVE_NERVES_HPP

#include <functional>
#include <string>
#include <vector>

#include "vnerve/cell_complex.hpp"
#include "vnerve/cycles.hpp"
#include "vnerve/disks.hpp"
#include "vnerve/proximity.hpp"
#include "vnerve/report.hpp"

namespace vnerve {

/// Subset-enumeration guard for nerve construction.
inline constexpr std::size_t kMaxNerveFamily = 20;

/// Abstract simplicial complex over an indexed family: the simplices are the
/// nonempty index subsets whose members share a common point (or cell).
/// Downward closed by construction; singleton indices are always simplices.
struct Nerve {
    std::size_t family_size = 0;
    std::vector<std::vector<int>> simplices; // sorted index sets, lex order

    bool has_simplex(const std::vector<int>& s) const;

    /// Simplices of dimension <= 2 (vertex/edge/triangle sets). Degrees 0-1
    /// homology of a complex equals that of its 2-skeleton.
    std::vector<std::vector<int>> two_skeleton() const;
};

/// Enumerates simplices of the nerve of an n-member family given a
/// common-intersection test. The test must be monotone under subset
/// inclusion; enumeration prunes supersets of empty intersections.
/// Throws SizeLimitError for n > kMaxNerveFamily.
Nerve eh_nerve_generic(std::size_t n,
                       const std::function<bool(const std::vector<int>&)>& has_common);

/// Nerve of cell-set families: common intersection means shared cells.
Nerve eh_nerve(const std::vector<CellComplex>& family);

/// Nerve of filled-cycle families: common intersection means a shared point
/// of the closed regions.
Nerve eh_nerve(const std::vector<FilledCycle>& family, const CellComplex& owner);

/// Nerve of closed disks.
Nerve eh_nerve(const std::vector<Disk>& family);

/// A point common to the closed regions of all cycles, when one exists.
/// Candidates are boundary vertices and pairwise boundary crossings, which
/// witness every nonempty intersection of polygonal regions.
std::optional<Point> cycles_common_point(const std::vector<FilledCycle>& cycles,
                                         const CellComplex& owner);

/// Nesting filled cycles with common intersection plus edges attached
/// between pairs of cycles.
struct VortexNerve {
    std::vector<FilledCycle> cycles;   // chain order when the family nests
    std::vector<Edge> attached_edges;
    std::vector<FilledCycle> holes;    // hole cycles carried for Betti counts
};

/// Validates Definition-2 structure: nonempty common intersection (a nesting
/// chain qualifies via its innermost region) and a path-connected whole.
/// Throws NotANerveError / NotPathConnectedError.
VortexNerve vortex_nerve(std::vector<FilledCycle> cycles, std::vector<Edge> attached,
                         const CellComplex& owner);

/// Builds the vortex nerve declared by a complex: members are the non-hole
/// declared cycles, attachments the declared attached edges, holes the
/// hole-flagged cycles.
VortexNerve vortex_nerve_of(const CellComplex& E);

enum class VortexNerveCase {
    Vertex0Cell,
    Edge1Cell,
    Triangle2Cell,
    PathConnectedCycle,
    NestedFilledPair,
    GeneralNerve,
};

const char* to_string(VortexNerveCase c);

struct VortexNerveCertificate {
    bool is_nerve = false;
    VortexNerveCase kind = VortexNerveCase::GeneralNerve;
    std::string detail; // matched case, or the first failed condition
};

/// Recognizes vortex nerves case by case: a lone vertex, a lone edge, a lone
/// filled triangle, a single path-connected cycle, a nested filled-cycle
/// pair, or a general Definition-2 decomposition of the declared structure.
VortexNerveCertificate is_vortex_nerve(const CellComplex& E);

/// Cells of both complexes merged into one complex; coordinates of shared
/// ids must agree. Cycle annotations are merged and deduplicated.
CellComplex union_complex(const CellComplex& A, const CellComplex& B);

/// CW-topology construction check over a collection: every member's closure
/// must be a member, and every nonempty pairwise intersection must be a
/// vortex nerve. With a probe the intersections are descriptive (cells of
/// A ∪ B whose descriptions occur on both sides); otherwise spatial.
/// Violations become report entries.
ConditionReport cw_from_collection(const std::vector<CellComplex>& K,
                                   const Probe* probe = nullptr,
                                   double eps = kDefaultTolerance);

} // namespace vnerve

#endif
