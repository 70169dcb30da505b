#include "vnerve/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace vnerve {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string render_svg(const CellComplex& E, const RenderOptions& options) {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    if (!E.vertices().empty()) {
        min_x = max_x = E.vertices().front().x;
        min_y = max_y = E.vertices().front().y;
        for (const Vertex& v : E.vertices()) {
            min_x = std::min(min_x, v.x);
            max_x = std::max(max_x, v.x);
            min_y = std::min(min_y, v.y);
            max_y = std::max(max_y, v.y);
        }
    }
    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-6});
    const double pad = 0.08 * extent;
    min_x -= pad;
    min_y -= pad;
    max_x += pad;
    max_y += pad;
    const double stroke = options.stroke_width * extent;

    std::ostringstream svg;
    // The y-axis is flipped so model coordinates read the usual way.
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x) << " "
        << fmt(-max_y) << " " << fmt(max_x - min_x) << " " << fmt(max_y - min_y)
        << "\" width=\"640\" height=\"640\">\n";

    auto polygon_points = [&](const std::vector<int>& boundary) {
        std::ostringstream pts;
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            const Point p = E.position(boundary[i]);
            if (i) pts << " ";
            pts << fmt(p.x) << "," << fmt(-p.y);
        }
        return pts.str();
    };

    // Filled cycle regions first (light), then holes (opaque) on top.
    for (const FilledCycle& c : E.declared_cycles()) {
        if (c.hole || c.degenerate() || !c.filled) continue;
        svg << "  <polygon class=\"cycle-fill\" points=\"" << polygon_points(c.boundary)
            << "\" fill=\"#ededed\" stroke=\"none\"/>\n";
    }
    for (const FilledCycle& c : E.declared_cycles()) {
        if (!c.hole || c.degenerate()) continue;
        svg << "  <polygon class=\"hole\" points=\"" << polygon_points(c.boundary)
            << "\" fill=\"#555555\" stroke=\"black\" stroke-width=\"" << fmt(stroke)
            << "\"/>\n";
    }

    // Triangles.
    for (const Triangle& t : E.triangles()) {
        svg << "  <polygon class=\"triangle\" points=\""
            << polygon_points({t.corners[0], t.corners[1], t.corners[2]})
            << "\" fill=\"#d8d8e8\" stroke=\"black\" stroke-width=\"" << fmt(stroke)
            << "\"/>\n";
    }

    // Edges: attached edges highlighted, everything else plain.
    const std::set<Edge> attached(E.attached_edges().begin(), E.attached_edges().end());
    for (const Edge& e : E.edges()) {
        const Point a = E.position(e.a);
        const Point b = E.position(e.b);
        const bool marked = attached.count(e) > 0;
        svg << "  <line class=\"" << (marked ? "attached" : "edge") << "\" x1=\""
            << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\"" << fmt(b.x)
            << "\" y2=\"" << fmt(-b.y) << "\" stroke=\""
            << (marked ? "#cc2222" : "black") << "\" stroke-width=\""
            << fmt(marked ? 1.6 * stroke : stroke) << "\"/>\n";
    }

    // Cycle outlines over the fills; degenerate cycles reuse their edge.
    for (const FilledCycle& c : E.declared_cycles()) {
        if (c.hole) continue;
        if (c.degenerate()) {
            if (c.boundary.size() == 2) {
                const Point a = E.position(c.boundary[0]);
                const Point b = E.position(c.boundary[1]);
                svg << "  <line class=\"cycle\" x1=\"" << fmt(a.x) << "\" y1=\""
                    << fmt(-a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(-b.y)
                    << "\" stroke=\"#3355cc\" stroke-width=\"" << fmt(1.4 * stroke)
                    << "\"/>\n";
            } else {
                const Point a = E.position(c.boundary[0]);
                svg << "  <circle class=\"cycle\" cx=\"" << fmt(a.x) << "\" cy=\""
                    << fmt(-a.y) << "\" r=\"" << fmt(2.2 * stroke)
                    << "\" fill=\"none\" stroke=\"#3355cc\" stroke-width=\""
                    << fmt(stroke) << "\"/>\n";
            }
            continue;
        }
        svg << "  <polygon class=\"cycle\" points=\"" << polygon_points(c.boundary)
            << "\" fill=\"none\" stroke=\"#3355cc\" stroke-width=\"" << fmt(1.2 * stroke)
            << "\"/>\n";
    }

    for (const Vertex& v : E.vertices()) {
        svg << "  <circle class=\"vertex\" cx=\"" << fmt(v.x) << "\" cy=\"" << fmt(-v.y)
            << "\" r=\"" << fmt(1.8 * stroke)
            << "\" fill=\"#f2d100\" stroke=\"black\" stroke-width=\"" << fmt(0.6 * stroke)
            << "\"/>\n";
        if (options.label_vertices) {
            svg << "  <text class=\"label\" x=\"" << fmt(v.x + 2.5 * stroke) << "\" y=\""
                << fmt(-v.y - 2.5 * stroke) << "\" font-size=\"" << fmt(8 * stroke)
                << "\">" << v.id << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace vnerve
