#ifndef VNERVE_GENERATE_HPP
#define VNERVE_GENERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vnerve/cell_complex.hpp"
#include "vnerve/disks.hpp"
#include "vnerve/proximity.hpp"

namespace vnerve {

inline constexpr int kMaxGeneratedVertices = 200;
inline constexpr int kMaxGeneratedDisks = 6;

enum class GenKind { RandomPlanar, NestedCycles, DiskFamily };

GenKind gen_kind_from_name(const std::string& name); // DomainError on unknown

/// Connected random planar straight-line graph with `size` vertices,
/// deterministic for a fixed seed.
CellComplex generate_random_planar(std::uint64_t seed, int size);

/// `size` strictly nesting polygons declared as filled cycles, optionally
/// with holes inside the innermost cycle. Valid build_vortex input.
CellComplex generate_nested_cycles(std::uint64_t seed, int size, int holes = 0);

/// `size` closed disks with margins between all pairwise and triple-wise
/// features, so rasterized union topology is stable at moderate resolution.
std::vector<Disk> generate_disk_family(std::uint64_t seed, int size);

/// Vortex-nerve instance with k member cycles (regular `sides`-gons),
/// n holes inside the innermost cycle and e edges attached between
/// consecutive cycles. Requires k >= 1, and k >= 2 when e > 0.
CellComplex make_nerve_instance(int k, int n, int e, int sides = 6,
                                double phase = 0.0);

/// Mixed universe for axiom checking: random planar graphs and nested-cycle
/// complexes with varying hole counts.
Collection generate_axiom_universe(std::uint64_t seed, int count);

} // namespace vnerve

#endif
