#ifndef VNERVE_SVG_HPP
#define VNERVE_SVG_HPP

#include <string>

#include "vnerve/cell_complex.hpp"

namespace vnerve {

struct RenderOptions {
    bool label_vertices = false;
    double stroke_width = 0.02; // in model units, scaled to the drawing
};

/// Deterministic SVG drawing of a complex: filled cycles lightly shaded,
/// holes shaded opaque, attached edges highlighted, vertices as dots.
/// Identical inputs produce byte-identical documents.
std::string render_svg(const CellComplex& E, const RenderOptions& options = {});

} // namespace vnerve

#endif
