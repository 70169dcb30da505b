#ifndef VNERVE_COMPLEX_IO_HPP
#define VNERVE_COMPLEX_IO_HPP

#include <string>
#include <vector>

#include "vnerve/cell_complex.hpp"
#include "vnerve/disks.hpp"

namespace vnerve {

/// Parses the structured complex format:
///   { "vertices": [{"id":0,"x":1.0,"y":2.0}, ...],
///     "edges": [[0,1], ...],
///     "triangles": [[0,1,2], ...],
///     "filled_cycles": [{"boundary":[...], "filled":true, "hole":false}, ...],
///     "attached_edges": [[0,1], ...] }
/// Unknown keys are rejected; ids must be declared in "vertices" before use.
/// Throws ParseError with the offending element named.
CellComplex parse_complex_text(const std::string& text, double tolerance = kDefaultTolerance);
CellComplex parse_complex(const std::string& path, double tolerance = kDefaultTolerance);

/// Canonical serialization (sorted cells, declared order for annotations);
/// parse(serialize(E)) reproduces the structure exactly.
std::string serialize_complex(const CellComplex& E);
void write_complex(const CellComplex& E, const std::string& path);

/// Disk-family format: { "disks": [{"x":0.0,"y":0.0,"r":1.0}, ...] }.
std::vector<Disk> parse_disks_text(const std::string& text);
std::vector<Disk> parse_disks(const std::string& path);
std::string serialize_disks(const std::vector<Disk>& family);
void write_disks(const std::vector<Disk>& family, const std::string& path);

} // namespace vnerve

#endif
