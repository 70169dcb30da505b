#include "vnerve/nerves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "planar_faces.hpp"
#include "vnerve/error.hpp"

namespace vnerve {

bool Nerve::has_simplex(const std::vector<int>& s) const {
    std::vector<int> key = s;
    std::sort(key.begin(), key.end());
    return std::binary_search(simplices.begin(), simplices.end(), key);
}

std::vector<std::vector<int>> Nerve::two_skeleton() const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices)
        if (s.size() <= 3) out.push_back(s);
    return out;
}

Nerve eh_nerve_generic(std::size_t n,
                       const std::function<bool(const std::vector<int>&)>& has_common) {
    if (n == 0) throw DomainError("nerve of an empty family");
    if (n > kMaxNerveFamily)
        throw SizeLimitError("family of " + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(kMaxNerveFamily));
    Nerve nerve;
    nerve.family_size = n;
    // DFS over index subsets in lexicographic order; supersets of an empty
    // intersection are pruned (the test is monotone).
    std::vector<int> current;
    std::function<void(int)> extend = [&](int next) {
        for (int i = next; i < static_cast<int>(n); ++i) {
            current.push_back(i);
            if (has_common(current)) {
                nerve.simplices.push_back(current);
                extend(i + 1);
            }
            current.pop_back();
        }
    };
    extend(0);
    std::sort(nerve.simplices.begin(), nerve.simplices.end());
    return nerve;
}

Nerve eh_nerve(const std::vector<CellComplex>& family) {
    for (const auto& m : family)
        if (m.empty()) throw DomainError("nerve family contains an empty complex");
    auto has_common = [&](const std::vector<int>& idx) {
        CellComplex common = family[static_cast<std::size_t>(idx[0])];
        for (std::size_t i = 1; i < idx.size(); ++i) {
            common = complex_intersection(common, family[static_cast<std::size_t>(idx[i])]);
            if (common.empty()) return false;
        }
        return !common.empty();
    };
    return eh_nerve_generic(family.size(), has_common);
}

std::optional<Point> cycles_common_point(const std::vector<FilledCycle>& cycles,
                                         const CellComplex& owner) {
    if (cycles.empty()) return std::nullopt;
    const double tol = owner.tolerance();

    auto in_closed_region = [&](Point p, const FilledCycle& c) {
        const Containment where = point_in_cycle(p, c, owner);
        if (where == Containment::OnBoundary) return true;
        if (c.degenerate()) return false;
        return c.filled && where == Containment::Inside;
    };

    // Candidate witnesses: boundary vertices, degenerate-segment midpoints,
    // region sample points, and pairwise boundary crossings. A nonempty
    // intersection of polygonal closed regions always exposes one of these
    // on its boundary or interior.
    std::vector<Point> candidates;
    for (const FilledCycle& c : cycles) {
        for (int id : c.boundary) candidates.push_back(owner.position(id));
        if (c.boundary.size() == 2) {
            const Point a = owner.position(c.boundary[0]);
            const Point b = owner.position(c.boundary[1]);
            candidates.push_back(0.5 * (a + b));
        }
        if (c.boundary.size() >= 3) {
            Point centroid{0, 0};
            for (int id : c.boundary) centroid = centroid + owner.position(id);
            candidates.push_back((1.0 / static_cast<double>(c.boundary.size())) * centroid);
        }
    }
    auto segments = [&](const FilledCycle& c) {
        std::vector<std::pair<Point, Point>> segs;
        const std::size_t n = c.boundary.size();
        if (n < 2) return segs;
        const std::size_t steps = (n == 2) ? 1 : n;
        for (std::size_t i = 0; i < steps; ++i)
            segs.emplace_back(owner.position(c.boundary[i]),
                              owner.position(c.boundary[(i + 1) % n]));
        return segs;
    };
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            for (const auto& [a, b] : segments(cycles[i]))
                for (const auto& [c, d] : segments(cycles[j]))
                    if (segments_intersect(a, b, c, d, tol) &&
                        orientation(a, b, c, tol) != orientation(a, b, d, tol))
                        candidates.push_back(segment_crossing_point(a, b, c, d));

    for (const Point& p : candidates) {
        bool everywhere = true;
        for (const FilledCycle& c : cycles)
            if (!in_closed_region(p, c)) {
                everywhere = false;
                break;
            }
        if (everywhere) return p;
    }
    return std::nullopt;
}

Nerve eh_nerve(const std::vector<FilledCycle>& family, const CellComplex& owner) {
    auto has_common = [&](const std::vector<int>& idx) {
        std::vector<FilledCycle> sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(family[static_cast<std::size_t>(i)]);
        return cycles_common_point(sub, owner).has_value();
    };
    return eh_nerve_generic(family.size(), has_common);
}

Nerve eh_nerve(const std::vector<Disk>& family) {
    auto has_common = [&](const std::vector<int>& idx) {
        std::vector<Disk> sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(family[static_cast<std::size_t>(i)]);
        return disks_common_point(sub).has_value();
    };
    return eh_nerve_generic(family.size(), has_common);
}

namespace {

std::string cycle_str(const FilledCycle& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.boundary.size(); ++i) {
        if (i) os << ",";
        os << c.boundary[i];
    }
    os << "]";
    return os.str();
}

struct CycleDsu {
    std::vector<std::size_t> parent;
    explicit CycleDsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

VortexNerve vortex_nerve(std::vector<FilledCycle> cycles, std::vector<Edge> attached,
                         const CellComplex& owner) {
    if (cycles.empty()) throw NotANerveError("empty cycle collection");

    // Attached edges must join boundary vertices of two distinct cycles.
    for (const Edge& e : attached) {
        bool spans = false;
        for (std::size_t i = 0; i < cycles.size() && !spans; ++i)
            for (std::size_t j = 0; j < cycles.size() && !spans; ++j) {
                if (i == j) continue;
                const auto& bi = cycles[i].boundary;
                const auto& bj = cycles[j].boundary;
                if (std::find(bi.begin(), bi.end(), e.a) != bi.end() &&
                    std::find(bj.begin(), bj.end(), e.b) != bj.end())
                    spans = true;
            }
        if (!spans)
            throw NotANerveError("attached edge (" + std::to_string(e.a) + "," +
                                 std::to_string(e.b) +
                                 ") does not join two distinct cycles");
    }

    // Common intersection. A nesting chain qualifies outright: the innermost
    // filled region lies in every polygonal member, and the degenerate
    // members thread through the chain. A degenerate cycle outside every
    // polygon is not part of a chain, so such families fall back to the
    // witness search.
    bool chain = true;
    std::vector<FilledCycle> ordered;
    try {
        Vortex v = build_vortex(cycles, owner);
        ordered = std::move(v.cycles);
    } catch (const NotAVortexError&) {
        chain = false;
    }
    if (chain) {
        bool has_polygon = false;
        for (const FilledCycle& c : cycles) {
            if (c.degenerate()) continue;
            has_polygon = true;
            if (!c.filled) chain = false; // unfilled members witness nothing
        }
        if (chain && has_polygon) {
            for (const FilledCycle& d : cycles) {
                if (!d.degenerate()) continue;
                bool threaded = false;
                for (const FilledCycle& p : cycles)
                    if (!p.degenerate() && contained_in_closed_region(d, p, owner))
                        threaded = true;
                if (!threaded) chain = false;
            }
        }
    }
    if (!chain && !cycles_common_point(cycles, owner).has_value())
        throw NotANerveError("cycles have empty common intersection");

    // Path-connectivity of the whole structure: overlapping regions connect
    // cycles, and each attached edge bridges the cycles at its endpoints.
    CycleDsu dsu(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (cycles_intersect(cycles[i], cycles[j], owner)) dsu.unite(i, j);
    for (const Edge& e : attached) {
        std::vector<std::size_t> touching_a, touching_b;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const auto& b = cycles[i].boundary;
            if (std::find(b.begin(), b.end(), e.a) != b.end()) touching_a.push_back(i);
            if (std::find(b.begin(), b.end(), e.b) != b.end()) touching_b.push_back(i);
        }
        for (std::size_t i : touching_a)
            for (std::size_t j : touching_b) dsu.unite(i, j);
    }
    for (std::size_t i = 1; i < cycles.size(); ++i)
        if (dsu.find(i) != dsu.find(0))
            throw NotPathConnectedError("cycle " + cycle_str(cycles[i]) +
                                        " is disconnected from the rest of the nerve");

    VortexNerve nerve;
    nerve.cycles = chain ? std::move(ordered) : std::move(cycles);
    nerve.attached_edges = std::move(attached);
    return nerve;
}

VortexNerve vortex_nerve_of(const CellComplex& E) {
    std::vector<FilledCycle> members = member_cycles(E);
    if (members.empty())
        throw NotANerveError("complex declares no member cycles");
    std::vector<FilledCycle> holes;
    for (const FilledCycle& c : E.declared_cycles())
        if (c.hole) holes.push_back(c);
    VortexNerve nerve = vortex_nerve(std::move(members), E.attached_edges(), E);
    nerve.holes = std::move(holes);
    return nerve;
}

const char* to_string(VortexNerveCase c) {
    switch (c) {
        case VortexNerveCase::Vertex0Cell: return "vertex-0-cell";
        case VortexNerveCase::Edge1Cell: return "edge-1-cell";
        case VortexNerveCase::Triangle2Cell: return "triangle-2-cell";
        case VortexNerveCase::PathConnectedCycle: return "path-connected-cycle";
        case VortexNerveCase::NestedFilledPair: return "nested-filled-pair";
        case VortexNerveCase::GeneralNerve: return "general-nerve";
    }
    return "unknown";
}

VortexNerveCertificate is_vortex_nerve(const CellComplex& E) {
    VortexNerveCertificate cert;
    const std::size_t nv = E.vertices().size();
    const std::size_t ne = E.edges().size();
    const std::size_t nt = E.triangles().size();

    if (nv == 0) {
        cert.detail = "empty complex";
        return cert;
    }
    if (nv == 1 && ne == 0 && nt == 0) {
        cert.is_nerve = true;
        cert.kind = VortexNerveCase::Vertex0Cell;
        cert.detail = "single 0-cell";
        return cert;
    }
    if (nv == 2 && ne == 1 && nt == 0) {
        cert.is_nerve = true;
        cert.kind = VortexNerveCase::Edge1Cell;
        cert.detail = "single bidirectional 1-cell";
        return cert;
    }
    if (nv == 3 && ne == 3 && nt == 1) {
        cert.is_nerve = true;
        cert.kind = VortexNerveCase::Triangle2Cell;
        cert.detail = "single filled 2-cell";
        return cert;
    }

    std::vector<int> comp;
    const int components = detail::component_count(E, &comp);

    // A lone cycle: connected, every vertex of degree 2, as many edges as
    // vertices, no 2-cells.
    if (nt == 0 && components == 1 && ne == nv) {
        std::map<int, int> degree;
        for (const Edge& e : E.edges()) {
            ++degree[e.a];
            ++degree[e.b];
        }
        bool all_two = degree.size() == nv;
        for (const auto& [v, d] : degree)
            if (d != 2) all_two = false;
        if (all_two) {
            cert.is_nerve = true;
            cert.kind = VortexNerveCase::PathConnectedCycle;
            cert.detail = "single path-connected cycle of length " + std::to_string(nv);
            return cert;
        }
    }

    // Member cycles: the declared ones, or the bounded faces when nothing is
    // declared.
    std::vector<FilledCycle> members = member_cycles(E);
    if (members.empty())
        for (const FilledCycle& c : find_cycles(E)) members.push_back(c);
    if (members.empty()) {
        cert.detail = "no cycle structure (not a vertex, edge, triangle, or cycle)";
        return cert;
    }

    if (members.size() == 2 && members[0].filled && members[1].filled &&
        (is_nested(members[0], members[1], E) || is_nested(members[1], members[0], E))) {
        cert.is_nerve = true;
        cert.kind = VortexNerveCase::NestedFilledPair;
        cert.detail = "nested filled cycle pair";
        return cert;
    }

    try {
        vortex_nerve(members, E.attached_edges(), E);
        cert.is_nerve = true;
        cert.kind = VortexNerveCase::GeneralNerve;
        cert.detail = "vortex nerve of " + std::to_string(members.size()) + " cycles and " +
                      std::to_string(E.attached_edges().size()) + " attached edges";
    } catch (const Error& err) {
        cert.detail = err.what();
    }
    return cert;
}

CellComplex union_complex(const CellComplex& A, const CellComplex& B) {
    const double tol = std::max(A.tolerance(), B.tolerance());
    std::map<int, Vertex> vertices;
    for (const Vertex& v : A.vertices()) vertices[v.id] = v;
    for (const Vertex& v : B.vertices()) {
        auto [it, inserted] = vertices.try_emplace(v.id, v);
        if (!inserted && !points_coincide(it->second.pos(), v.pos(), tol))
            throw IncompatibleSpaceError("vertex " + std::to_string(v.id) +
                                         " has different coordinates in the two complexes");
    }
    std::set<Edge> edges(A.edges().begin(), A.edges().end());
    edges.insert(B.edges().begin(), B.edges().end());
    std::set<Triangle> tris(A.triangles().begin(), A.triangles().end());
    tris.insert(B.triangles().begin(), B.triangles().end());

    std::vector<FilledCycle> cycles;
    auto push_cycle = [&](const FilledCycle& c) {
        for (const FilledCycle& have : cycles)
            if (have.same_boundary(c)) return;
        cycles.push_back(c);
    };
    for (const FilledCycle& c : A.declared_cycles()) push_cycle(c);
    for (const FilledCycle& c : B.declared_cycles()) push_cycle(c);
    std::set<Edge> attached(A.attached_edges().begin(), A.attached_edges().end());
    attached.insert(B.attached_edges().begin(), B.attached_edges().end());

    std::vector<Vertex> vs;
    for (const auto& [id, v] : vertices) vs.push_back(v);
    std::vector<std::array<int, 2>> es;
    for (const Edge& e : edges) es.push_back({e.a, e.b});
    std::vector<std::array<int, 3>> ts;
    for (const Triangle& t : tris) ts.push_back({t.corners[0], t.corners[1], t.corners[2]});
    std::vector<std::array<int, 2>> as;
    for (const Edge& e : attached) as.push_back({e.a, e.b});
    return CellComplex::build(std::move(vs), std::move(es), std::move(ts),
                              std::move(cycles), std::move(as), tol);
}

namespace {

/// Descriptive intersection of two complexes at cell granularity: the cells
/// of A ∪ B whose single-cell closure describes like some cell of A and some
/// cell of B.
CellComplex descriptive_cell_intersection(const CellComplex& A, const CellComplex& B,
                                          const Probe& probe, double eps) {
    const CellComplex space = union_complex(A, B);

    struct CellRef {
        CellSet cells;
        bool in_a = false;
        bool in_b = false;
        FeatureVector description;
    };
    std::vector<CellRef> refs;
    auto add = [&](CellSet cs, bool ina, bool inb) {
        CellRef r;
        r.cells = std::move(cs);
        r.in_a = ina;
        r.in_b = inb;
        refs.push_back(std::move(r));
    };
    for (const Vertex& v : space.vertices()) {
        CellSet cs;
        cs.vertices.insert(v.id);
        add(std::move(cs), A.has_vertex(v.id), B.has_vertex(v.id));
    }
    for (const Edge& e : space.edges()) {
        CellSet cs;
        cs.edges.insert(e);
        add(std::move(cs), A.has_edge(e), B.has_edge(e));
    }
    for (const Triangle& t : space.triangles()) {
        CellSet cs;
        cs.triangles.insert(t);
        add(std::move(cs), A.has_triangle(t), B.has_triangle(t));
    }
    for (CellRef& r : refs) r.description = probe(closure(space, r.cells));

    CellSet matched;
    for (const CellRef& r : refs) {
        bool desc_in_a = false, desc_in_b = false;
        for (const CellRef& o : refs) {
            if (o.in_a && r.description.matches(o.description, eps)) desc_in_a = true;
            if (o.in_b && r.description.matches(o.description, eps)) desc_in_b = true;
        }
        if (desc_in_a && desc_in_b) {
            matched.vertices.insert(r.cells.vertices.begin(), r.cells.vertices.end());
            matched.edges.insert(r.cells.edges.begin(), r.cells.edges.end());
            matched.triangles.insert(r.cells.triangles.begin(), r.cells.triangles.end());
        }
    }
    if (matched.empty()) return {};
    return closure(space, matched);
}

} // namespace

ConditionReport cw_from_collection(const std::vector<CellComplex>& K, const Probe* probe,
                                   double eps) {
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
            const CellComplex common =
                probe ? descriptive_cell_intersection(K[i], K[j], *probe, eps)
                      : complex_intersection(K[i], K[j]);
            const std::string claim = std::string(probe ? "descriptive-" : "") +
                                      "intersection[" + std::to_string(i) + "][" +
                                      std::to_string(j) + "]";
            if (common.empty()) continue; // disjoint pairs impose nothing
            const VortexNerveCertificate cert = is_vortex_nerve(common);
            report.add(claim, cert.is_nerve,
                       cert.is_nerve ? to_string(cert.kind) : cert.detail);
        }
    }
    return report;
}

} // namespace vnerve
