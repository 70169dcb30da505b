#include "vnerve/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "vnerve/error.hpp"

namespace vnerve {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Uniform helpers built on raw mt19937_64 output; distribution classes are
// not portable across standard libraries.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    double uniform() {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace

GenKind gen_kind_from_name(const std::string& name) {
    if (name == "random-planar") return GenKind::RandomPlanar;
    if (name == "nested-cycles") return GenKind::NestedCycles;
    if (name == "disk-family") return GenKind::DiskFamily;
    throw DomainError("unknown generator kind '" + name +
                      "' (random-planar, nested-cycles, disk-family)");
}

CellComplex generate_random_planar(std::uint64_t seed, int size) {
    if (size < 1) throw DomainError("size must be positive");
    if (size > kMaxGeneratedVertices)
        throw SizeLimitError("size " + std::to_string(size) + " exceeds the guard of " +
                             std::to_string(kMaxGeneratedVertices) + " vertices");
    Rng rng(seed);

    // Well-separated random points.
    const double span = 10.0;
    const double min_sep = 0.3 * span / std::sqrt(static_cast<double>(size));
    std::vector<Vertex> vertices;
    int attempts = 0;
    while (static_cast<int>(vertices.size()) < size && attempts < 100000) {
        ++attempts;
        const Point p{rng.uniform(0.0, span), rng.uniform(0.0, span)};
        bool ok = true;
        for (const Vertex& v : vertices)
            if (dist(v.pos(), p) < min_sep) {
                ok = false;
                break;
            }
        if (ok)
            vertices.push_back({static_cast<int>(vertices.size()), p.x, p.y});
    }

    // Greedy planar graph: candidate edges by increasing length, accepted when
    // they cross nothing already accepted and pass through no vertex.
    struct Candidate {
        int a, b;
        double len;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            candidates.push_back({static_cast<int>(i), static_cast<int>(j),
                                  dist(vertices[i].pos(), vertices[j].pos())});
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& x, const Candidate& y) {
                  if (x.len != y.len) return x.len < y.len;
                  return std::pair(x.a, x.b) < std::pair(y.a, y.b);
              });

    std::vector<std::array<int, 2>> accepted;
    auto crosses = [&](int a, int b) {
        const Point pa = vertices[static_cast<std::size_t>(a)].pos();
        const Point pb = vertices[static_cast<std::size_t>(b)].pos();
        for (const auto& e : accepted) {
            const bool share = e[0] == a || e[0] == b || e[1] == a || e[1] == b;
            const Point pc = vertices[static_cast<std::size_t>(e[0])].pos();
            const Point pd = vertices[static_cast<std::size_t>(e[1])].pos();
            if (segments_cross_properly(pa, pb, pc, pd)) return true;
            if (!share && segments_intersect(pa, pb, pc, pd)) return true;
        }
        for (const Vertex& v : vertices) {
            if (v.id == a || v.id == b) continue;
            if (point_on_segment(v.pos(), pa, pb)) return true;
        }
        return false;
    };
    // Keep roughly 2.2 edges per vertex so faces stay plentiful but the
    // graph is not a full triangulation; always finish connected.
    const std::size_t target = static_cast<std::size_t>(2.2 * size);
    for (const Candidate& c : candidates) {
        if (accepted.size() >= target) break;
        if (rng.uniform() < 0.15) continue; // sprinkle variety
        if (!crosses(c.a, c.b)) accepted.push_back({c.a, c.b});
    }
    // Connectivity pass: union-find, then add the shortest missing links.
    std::vector<int> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& e : accepted)
        parent[static_cast<std::size_t>(find(e[0]))] = find(e[1]);
    for (const Candidate& c : candidates) {
        if (find(c.a) == find(c.b)) continue;
        if (crosses(c.a, c.b)) continue;
        accepted.push_back({c.a, c.b});
        parent[static_cast<std::size_t>(find(c.a))] = find(c.b);
    }

    return CellComplex::build(std::move(vertices), std::move(accepted), {});
}

namespace {

CellComplex nested_polygons(Point center, double base_radius, double ratio, int count,
                            int sides, double phase, int holes) {
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<FilledCycle> cycles;
    int next_id = 0;
    for (int c = 0; c < count; ++c) {
        const double r = base_radius * std::pow(ratio, c);
        FilledCycle cycle;
        const int first = next_id;
        for (int j = 0; j < sides; ++j) {
            const double t = phase + 2.0 * kPi * j / sides;
            vertices.push_back({next_id, center.x + r * std::cos(t),
                                center.y + r * std::sin(t)});
            cycle.boundary.push_back(next_id);
            ++next_id;
        }
        for (int j = 0; j < sides; ++j)
            edges.push_back({first + j, first + (j + 1) % sides});
        cycles.push_back(std::move(cycle));
    }
    // Holes: small squares spread inside the innermost polygon.
    const double inner_r = base_radius;
    for (int hidx = 0; hidx < holes; ++hidx) {
        const double t = phase + 2.0 * kPi * hidx / std::max(1, holes);
        const Point c = center + (0.45 * inner_r) * Point{std::cos(t), std::sin(t)};
        const double half = 0.06 * inner_r;
        FilledCycle hole;
        hole.hole = true;
        const int first = next_id;
        const Point corners[4] = {{c.x - half, c.y - half},
                                  {c.x + half, c.y - half},
                                  {c.x + half, c.y + half},
                                  {c.x - half, c.y + half}};
        for (const Point& p : corners) {
            vertices.push_back({next_id, p.x, p.y});
            hole.boundary.push_back(next_id);
            ++next_id;
        }
        for (int j = 0; j < 4; ++j) edges.push_back({first + j, first + (j + 1) % 4});
        cycles.push_back(std::move(hole));
    }
    return CellComplex::build(std::move(vertices), std::move(edges), {},
                              std::move(cycles), {});
}

} // namespace

CellComplex generate_nested_cycles(std::uint64_t seed, int size, int holes) {
    if (size < 1) throw DomainError("size must be positive");
    Rng rng(seed);
    const int sides = 2 * rng.uniform_int(3, 6); // 6, 8, 10 or 12
    if (size * sides + 4 * holes > kMaxGeneratedVertices)
        throw SizeLimitError("nested-cycles instance exceeds the vertex guard");
    const double phase = rng.uniform(0.0, 2.0 * kPi);
    const Point center{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    // ratio > 1/cos(pi/sides), so vertices of cycle i stay strictly inside
    // cycle i+1.
    const double ratio = rng.uniform(1.35, 1.6);
    return nested_polygons(center, 1.0, ratio, size, sides, phase, holes);
}

std::vector<Disk> generate_disk_family(std::uint64_t seed, int size) {
    if (size < 1) throw DomainError("size must be positive");
    if (size > kMaxGeneratedDisks)
        throw SizeLimitError("size " + std::to_string(size) + " exceeds the guard of " +
                             std::to_string(kMaxGeneratedDisks) + " disks");
    Rng rng(seed);
    const double margin = 0.05;

    auto family_ok = [&](const std::vector<Disk>& disks) {
        // Pairwise features must be decisive: no near-tangencies, outer or
        // inner.
        for (std::size_t i = 0; i < disks.size(); ++i)
            for (std::size_t j = i + 1; j < disks.size(); ++j) {
                const double d = dist(disks[i].center, disks[j].center);
                if (std::abs(d - (disks[i].radius + disks[j].radius)) < margin)
                    return false;
                if (std::abs(d - std::abs(disks[i].radius - disks[j].radius)) < margin)
                    return false;
            }
        // Triple-wise: common intersections are either empty with margin or
        // contain a disk of radius `margin`.
        for (std::size_t i = 0; i < disks.size(); ++i)
            for (std::size_t j = i + 1; j < disks.size(); ++j)
                for (std::size_t k = j + 1; k < disks.size(); ++k) {
                    const std::vector<Disk> triple{disks[i], disks[j], disks[k]};
                    std::vector<Point> candidates;
                    for (const Disk& d : triple) candidates.push_back(d.center);
                    for (std::size_t a = 0; a < 3; ++a)
                        for (std::size_t b = a + 1; b < 3; ++b)
                            for (const Point& p : circle_crossings(triple[a], triple[b]))
                                candidates.push_back(p);
                    double best = -1e9; // max over candidates of min clearance
                    for (const Point& p : candidates) {
                        double clearance = 1e9;
                        for (const Disk& d : triple)
                            clearance = std::min(clearance, d.radius - dist(p, d.center));
                        best = std::max(best, clearance);
                    }
                    if (std::abs(best) < margin) return false;
                }
        return true;
    };

    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Disk> disks;
        for (int i = 0; i < size; ++i)
            disks.push_back(Disk{{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)},
                                 rng.uniform(0.18, 0.38)});
        if (family_ok(disks)) return disks;
    }
    throw Error("disk-family generation failed to satisfy margins");
}

CellComplex make_nerve_instance(int k, int n, int e, int sides, double phase) {
    if (k < 1) throw DomainError("k >= 1 required");
    if (n < 0 || e < 0) throw DomainError("negative n or e");
    if (e > 0 && k < 2) throw DomainError("attached edges need at least two cycles");
    if (sides < 6) throw DomainError("sides >= 6 required for safe nesting");

    const double ratio = 1.4;
    CellComplex base = nested_polygons({0.0, 0.0}, 1.0, ratio, k, sides, phase, n);

    if (e == 0) return base;

    // Re-assemble with attached edges: spoke t joins vertex `angle` of cycle
    // `gap` to the same angle on cycle gap+1. Distinct (gap, angle) pairs keep
    // the embedding planar.
    std::vector<Vertex> vertices = base.vertices();
    std::vector<std::array<int, 2>> edges;
    for (const Edge& ed : base.edges()) edges.push_back({ed.a, ed.b});
    std::vector<FilledCycle> cycles = base.declared_cycles();
    std::vector<std::array<int, 2>> attached;
    for (int t = 0; t < e; ++t) {
        const int gap = t % (k - 1);
        const int angle = (t / (k - 1)) % sides;
        const int inner_vertex = gap * sides + angle;
        const int outer_vertex = (gap + 1) * sides + angle;
        edges.push_back({inner_vertex, outer_vertex});
        attached.push_back({inner_vertex, outer_vertex});
    }
    return CellComplex::build(std::move(vertices), std::move(edges), {},
                              std::move(cycles), std::move(attached));
}

Collection generate_axiom_universe(std::uint64_t seed, int count) {
    Collection universe;
    universe.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(i);
        switch (i % 3) {
            case 0:
                universe.push_back(generate_random_planar(s, 8 + (i % 5) * 3));
                break;
            case 1:
                universe.push_back(generate_nested_cycles(s, 1 + i % 4, i % 3));
                break;
            default:
                universe.push_back(
                    make_nerve_instance(2 + i % 3, i % 4, (i % 5), 6, 0.1 * i));
                break;
        }
    }
    return universe;
}

} // namespace vnerve
