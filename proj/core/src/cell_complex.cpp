#include "vnerve/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "planar_faces.hpp"
#include "vnerve/error.hpp"

namespace vnerve {

namespace {

std::string edge_str(Edge e) {
    std::ostringstream os;
    os << "(" << e.a << "," << e.b << ")";
    return os.str();
}

std::string triangle_str(const Triangle& t) {
    std::ostringstream os;
    os << "(" << t.corners[0] << "," << t.corners[1] << "," << t.corners[2] << ")";
    return os.str();
}

} // namespace

Triangle::Triangle(int u, int v, int w) : corners{u, v, w} {
    std::sort(corners.begin(), corners.end());
}

bool CellComplex::has_vertex(int id) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                                     [](const Vertex& v, int i) { return v.id < i; });
    return it != vertices_.end() && it->id == id;
}

bool CellComplex::has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool CellComplex::has_triangle(const Triangle& t) const {
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

Point CellComplex::position(int id) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                                     [](const Vertex& v, int i) { return v.id < i; });
    if (it == vertices_.end() || it->id != id)
        throw MalformedComplexError("unknown vertex id " + std::to_string(id));
    return it->pos();
}

std::vector<Point> CellComplex::polyline(const std::vector<int>& ids) const {
    std::vector<Point> pts;
    pts.reserve(ids.size());
    for (int id : ids) pts.push_back(position(id));
    return pts;
}

CellSet CellComplex::all_cells() const {
    CellSet cs;
    for (const Vertex& v : vertices_) cs.vertices.insert(v.id);
    cs.edges.insert(edges_.begin(), edges_.end());
    cs.triangles.insert(triangles_.begin(), triangles_.end());
    return cs;
}

bool CellComplex::same_cells(const CellComplex& other) const {
    if (vertices_.size() != other.vertices_.size()) return false;
    if (edges_ != other.edges_ || triangles_ != other.triangles_) return false;
    const double tol = std::max(tolerance_, other.tolerance_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].id != other.vertices_[i].id) return false;
        if (!points_coincide(vertices_[i].pos(), other.vertices_[i].pos(), tol))
            return false;
    }
    return true;
}

CellComplex CellComplex::build(std::vector<Vertex> vertices,
                               std::vector<std::array<int, 2>> edge_pairs,
                               std::vector<std::array<int, 3>> triangle_triples,
                               std::vector<FilledCycle> declared_cycles,
                               std::vector<std::array<int, 2>> attached_pairs,
                               double tolerance) {
    CellComplex cx;
    cx.tolerance_ = tolerance;

    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i].id == vertices[i + 1].id)
            throw MalformedComplexError("duplicate vertex id " +
                                        std::to_string(vertices[i].id));
    for (const Vertex& v : vertices)
        if (v.id < 0)
            throw MalformedComplexError("negative vertex id " + std::to_string(v.id));
    // Geometric distinctness stands in for the Hausdorff condition.
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (points_coincide(vertices[i].pos(), vertices[j].pos(), tolerance))
                throw MalformedComplexError(
                    "vertices " + std::to_string(vertices[i].id) + " and " +
                    std::to_string(vertices[j].id) + " share coordinates");
    cx.vertices_ = std::move(vertices);

    std::vector<Edge> edges;
    edges.reserve(edge_pairs.size());
    for (const auto& p : edge_pairs) {
        if (p[0] == p[1])
            throw MalformedComplexError("edge with equal endpoints " +
                                        std::to_string(p[0]));
        Edge e(p[0], p[1]);
        if (!cx.has_vertex(e.a) || !cx.has_vertex(e.b))
            throw MalformedComplexError("edge " + edge_str(e) +
                                        " references a missing vertex");
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw MalformedComplexError("duplicate edge");
    cx.edges_ = std::move(edges);

    std::vector<Triangle> tris;
    tris.reserve(triangle_triples.size());
    for (const auto& t : triangle_triples) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw MalformedComplexError("triangle with repeated corners");
        Triangle tri(t[0], t[1], t[2]);
        for (int c : tri.corners)
            if (!cx.has_vertex(c))
                throw MalformedComplexError("triangle " + triangle_str(tri) +
                                            " references a missing vertex");
        // Face closure: all three boundary edges must be cells.
        const Edge sides[3] = {Edge(tri.corners[0], tri.corners[1]),
                               Edge(tri.corners[1], tri.corners[2]),
                               Edge(tri.corners[0], tri.corners[2])};
        for (const Edge& s : sides)
            if (!cx.has_edge(s))
                throw MalformedComplexError("triangle " + triangle_str(tri) +
                                            " is missing boundary edge " + edge_str(s));
        if (orientation(cx.position(tri.corners[0]), cx.position(tri.corners[1]),
                        cx.position(tri.corners[2]), tolerance) == 0)
            throw MalformedComplexError("triangle " + triangle_str(tri) +
                                        " has collinear corners");
        tris.push_back(tri);
    }
    std::sort(tris.begin(), tris.end());
    if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
        throw MalformedComplexError("duplicate triangle");
    cx.triangles_ = std::move(tris);

    // Planar straight-line embedding: edges meet only at shared endpoints,
    // and no vertex sits in the relative interior of an edge.
    const auto& es = cx.edges_;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Point a = cx.position(es[i].a), b = cx.position(es[i].b);
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const bool share = es[i].a == es[j].a || es[i].a == es[j].b ||
                               es[i].b == es[j].a || es[i].b == es[j].b;
            const Point c = cx.position(es[j].a), d = cx.position(es[j].b);
            if (segments_cross_properly(a, b, c, d, tolerance) ||
                (!share && segments_intersect(a, b, c, d, tolerance)))
                throw EmbeddingError("edges " + edge_str(es[i]) + " and " +
                                     edge_str(es[j]) + " cross");
        }
        for (const Vertex& v : cx.vertices_) {
            if (v.id == es[i].a || v.id == es[i].b) continue;
            if (point_on_segment(v.pos(), a, b, tolerance))
                throw EmbeddingError("vertex " + std::to_string(v.id) +
                                     " lies on edge " + edge_str(es[i]));
        }
    }
    // 2-cells have empty interiors with respect to other cells.
    for (const Triangle& t : cx.triangles_) {
        const std::vector<Point> poly = {cx.position(t.corners[0]),
                                         cx.position(t.corners[1]),
                                         cx.position(t.corners[2])};
        for (const Vertex& v : cx.vertices_) {
            if (v.id == t.corners[0] || v.id == t.corners[1] || v.id == t.corners[2])
                continue;
            if (point_in_polygon(v.pos(), poly, tolerance) == Containment::Inside)
                throw EmbeddingError("vertex " + std::to_string(v.id) +
                                     " lies inside triangle " + triangle_str(t));
        }
    }

    // Cycle annotations.
    for (const FilledCycle& c : declared_cycles) {
        if (c.boundary.empty())
            throw MalformedComplexError("declared cycle with empty boundary");
        for (int id : c.boundary)
            if (!cx.has_vertex(id))
                throw MalformedComplexError("declared cycle references missing vertex " +
                                            std::to_string(id));
        if (c.boundary.size() >= 2) {
            const std::size_t n = c.boundary.size();
            const std::size_t steps = (n == 2) ? 1 : n; // an edge closes on itself
            for (std::size_t i = 0; i < steps; ++i) {
                const Edge e(c.boundary[i], c.boundary[(i + 1) % n]);
                if (e.a == e.b || !cx.has_edge(e))
                    throw MalformedComplexError("declared cycle is not a closed edge path at " +
                                                edge_str(e));
            }
        }
        if (c.hole && c.boundary.size() >= 3) {
            // A hole's interior contains no cells.
            const auto poly = cx.polyline(c.boundary);
            for (const Vertex& v : cx.vertices_) {
                if (std::find(c.boundary.begin(), c.boundary.end(), v.id) !=
                    c.boundary.end())
                    continue;
                if (point_in_polygon(v.pos(), poly, tolerance) == Containment::Inside)
                    throw MalformedComplexError(
                        "hole cycle contains vertex " + std::to_string(v.id) +
                        " in its interior");
            }
            for (const Triangle& t : cx.triangles_) {
                Point centroid{0.0, 0.0};
                for (int cidx : t.corners) centroid = centroid + cx.position(cidx);
                centroid = (1.0 / 3.0) * centroid;
                if (point_in_polygon(centroid, poly, tolerance) == Containment::Inside)
                    throw MalformedComplexError("hole cycle contains triangle " +
                                                triangle_str(t) + " in its interior");
            }
        }
    }
    cx.declared_cycles_ = std::move(declared_cycles);

    std::vector<Edge> attached;
    attached.reserve(attached_pairs.size());
    for (const auto& p : attached_pairs) {
        Edge e(p[0], p[1]);
        if (!cx.has_edge(e))
            throw MalformedComplexError("attached edge " + edge_str(e) +
                                        " is not an edge of the complex");
        attached.push_back(e);
    }
    std::sort(attached.begin(), attached.end());
    if (std::adjacent_find(attached.begin(), attached.end()) != attached.end())
        throw MalformedComplexError("duplicate attached edge");
    if (!attached.empty()) {
        // Each attachment must span two distinct declared cycles.
        for (const Edge& e : attached) {
            bool spans = false;
            const auto& cycles = cx.declared_cycles_;
            for (std::size_t i = 0; i < cycles.size() && !spans; ++i)
                for (std::size_t j = 0; j < cycles.size() && !spans; ++j) {
                    if (i == j) continue;
                    const auto& bi = cycles[i].boundary;
                    const auto& bj = cycles[j].boundary;
                    const bool a_on_i = std::find(bi.begin(), bi.end(), e.a) != bi.end();
                    const bool b_on_j = std::find(bj.begin(), bj.end(), e.b) != bj.end();
                    if (a_on_i && b_on_j) spans = true;
                }
            if (!spans)
                throw MalformedComplexError("attached edge " + edge_str(e) +
                                            " does not join two distinct declared cycles");
        }
    }
    cx.attached_edges_ = std::move(attached);
    return cx;
}

CellComplex closure(const CellComplex& space, const CellSet& cells) {
    CellSet out = cells;
    for (const Triangle& t : cells.triangles) {
        if (!space.has_triangle(t))
            throw MalformedComplexError("closure: triangle not in space");
        out.edges.insert(Edge(t.corners[0], t.corners[1]));
        out.edges.insert(Edge(t.corners[1], t.corners[2]));
        out.edges.insert(Edge(t.corners[0], t.corners[2]));
    }
    for (const Edge& e : out.edges) {
        if (!space.has_edge(e))
            throw MalformedComplexError("closure: edge not in space");
        out.vertices.insert(e.a);
        out.vertices.insert(e.b);
    }
    std::vector<Vertex> vs;
    for (int id : out.vertices) {
        if (!space.has_vertex(id))
            throw MalformedComplexError("closure: vertex " + std::to_string(id) +
                                        " not in space");
        const Point p = space.position(id);
        vs.push_back({id, p.x, p.y});
    }
    std::vector<std::array<int, 2>> es;
    for (const Edge& e : out.edges) es.push_back({e.a, e.b});
    std::vector<std::array<int, 3>> ts;
    for (const Triangle& t : out.triangles)
        ts.push_back({t.corners[0], t.corners[1], t.corners[2]});
    return CellComplex::build(std::move(vs), std::move(es), std::move(ts), {}, {},
                              space.tolerance());
}

CellComplex closure(const CellComplex& E) { return E; }

namespace {

// Per-component outer walks that are not enclosed by a bounded face of a
// different component bound the global unbounded region.
std::vector<detail::FaceWalk> global_outer_walks(const CellComplex& E,
                                                 const std::vector<detail::FaceWalk>& faces) {
    std::vector<detail::FaceWalk> outers;
    for (const auto& f : faces)
        if (!f.bounded) outers.push_back(f);
    std::vector<detail::FaceWalk> result;
    for (const auto& f : outers) {
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
        if (!enclosed) result.push_back(f);
    }
    return result;
}

} // namespace

CellComplex boundary(const CellComplex& E) {
    if (E.empty()) return {};
    const auto faces = detail::trace_faces(E);
    CellSet cells;
    for (const auto& f : global_outer_walks(E, faces)) {
        const std::size_t n = f.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            cells.vertices.insert(f.vertices[i]);
            cells.edges.insert(Edge(f.vertices[i], f.vertices[(i + 1) % n]));
        }
    }
    // Isolated vertices sit on the unbounded face unless enclosed by some
    // bounded face of another part of the complex.
    std::map<int, bool> touched;
    for (const Edge& e : E.edges()) {
        touched[e.a] = true;
        touched[e.b] = true;
    }
    for (const Vertex& v : E.vertices()) {
        if (touched.count(v.id)) continue;
        bool enclosed = false;
        for (const auto& f : faces) {
            if (!f.bounded) continue;
            if (point_in_polygon(v.pos(), E.polyline(f.vertices), E.tolerance()) ==
                Containment::Inside) {
                enclosed = true;
                break;
            }
        }
        if (!enclosed) cells.vertices.insert(v.id);
    }
    return closure(E, cells);
}

CellSet interior(const CellComplex& E) {
    const CellComplex bd = boundary(E);
    CellSet cells;
    for (const Vertex& v : E.vertices())
        if (!bd.has_vertex(v.id)) cells.vertices.insert(v.id);
    for (const Edge& e : E.edges())
        if (!bd.has_edge(e)) cells.edges.insert(e);
    for (const Triangle& t : E.triangles()) cells.triangles.insert(t);
    return cells;
}

CellComplex complex_intersection(const CellComplex& A, const CellComplex& B) {
    const double tol = std::max(A.tolerance(), B.tolerance());
    CellSet cells;
    for (const Vertex& v : A.vertices()) {
        if (!B.has_vertex(v.id)) continue;
        if (!points_coincide(v.pos(), B.position(v.id), tol))
            throw IncompatibleSpaceError("vertex " + std::to_string(v.id) +
                                         " has different coordinates in the two complexes");
        cells.vertices.insert(v.id);
    }
    for (const Edge& e : A.edges())
        if (B.has_edge(e)) cells.edges.insert(e);
    for (const Triangle& t : A.triangles())
        if (B.has_triangle(t)) cells.triangles.insert(t);

    std::vector<Vertex> vs;
    for (int id : cells.vertices) {
        const Point p = A.position(id);
        vs.push_back({id, p.x, p.y});
    }
    std::vector<std::array<int, 2>> es;
    for (const Edge& e : cells.edges) es.push_back({e.a, e.b});
    std::vector<std::array<int, 3>> ts;
    for (const Triangle& t : cells.triangles)
        ts.push_back({t.corners[0], t.corners[1], t.corners[2]});
    return CellComplex::build(std::move(vs), std::move(es), std::move(ts), {}, {}, tol);
}

int connected_components(const CellComplex& E) {
    return detail::component_count(E);
}

ConditionReport check_cw_conditions(const std::vector<CellComplex>& K) {
    ConditionReport report;
    auto member_of = [&](const CellComplex& c) {
        for (const CellComplex& m : K)
            if (m.same_cells(c)) return true;
        return false;
    };
    for (std::size_t i = 0; i < K.size(); ++i) {
        const CellComplex cl = closure(K[i], K[i].all_cells());
        const bool ok = member_of(cl);
        report.add("closure[" + std::to_string(i) + "]", ok,
                   ok ? "" : "closure of member " + std::to_string(i) +
                                 " is not in the collection");
    }
    for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t j = i + 1; j < K.size(); ++j) {
            const CellComplex common = complex_intersection(K[i], K[j]);
            if (common.empty()) continue; // disjoint members impose nothing
            const bool ok = member_of(common);
            report.add("intersection[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                       ok,
                       ok ? ""
                          : "intersection of members " + std::to_string(i) + " and " +
                                std::to_string(j) + " (" +
                                std::to_string(common.cell_count()) +
                                " cells) is not in the collection");
        }
    }
    return report;
}

} // namespace vnerve
