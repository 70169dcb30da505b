#include "vnerve/betti.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "vnerve/error.hpp"

namespace vnerve {

BettiReport betti_numbers(const CellComplex& E) {
    BettiReport r;
    r.b0 = static_cast<int>(E.cell_count());
    r.b1 = static_cast<int>(find_cycles(E).size());
    for (const FilledCycle& c : E.declared_cycles())
        if (c.hole) ++r.b2;
    return r;
}

BettiReport betti_numbers(const Vortex& v) {
    BettiReport r;
    r.b1 = static_cast<int>(v.cycles.size());
    r.b_vtex = r.b1;
    return r;
}

BettiReport betti_numbers(const VortexNerve& n) {
    BettiReport r;
    r.b0 = static_cast<int>(n.attached_edges.size());
    r.b1 = static_cast<int>(n.cycles.size());
    r.b2 = static_cast<int>(n.holes.size());
    r.b_vnrv = r.b0 + r.b1 + r.b2;
    return r;
}

BettiReport betti_numbers(const Shape& s) {
    BettiReport r;
    r.b1 = 1; // a shape has a single boundary cycle
    r.b2 = static_cast<int>(s.interior_holes.size());
    r.b_sh = 1 + r.b2;
    return r;
}

BettiReport betti_numbers(const Shape& s, const VortexNerve& backing) {
    BettiReport r = betti_numbers(backing);
    r.b2 = static_cast<int>(s.interior_holes.size());
    r.b_vnrv.reset();
    r.b_sh = r.b0 + r.b1 + r.b2;
    return r;
}

int vnrv_closed_form(int k, int n, int e) {
    if (k < 1) throw DomainError("vortex nerve needs at least one cycle (k >= 1)");
    if (n < 0 || e < 0) throw DomainError("negative hole or edge count");
    return e + k + n;
}

namespace {

// Rank of a dense GF(2) matrix given as row bitsets.
int gf2_rank(std::vector<std::vector<bool>> rows, std::size_t cols) {
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || !rows[r][col]) continue;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] != rows[row][c];
        }
        ++rank;
        ++row;
    }
    return rank;
}

} // namespace

std::pair<int, int> homology_betti(const std::vector<std::vector<int>>& simplices) {
    std::set<int> vertices;
    std::set<std::array<int, 2>> edges;
    std::set<std::array<int, 3>> triangles;
    for (const auto& s : simplices) {
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        switch (sorted.size()) {
            case 0: break;
            case 1: vertices.insert(sorted[0]); break;
            case 2: edges.insert({sorted[0], sorted[1]}); break;
            case 3: triangles.insert({sorted[0], sorted[1], sorted[2]}); break;
            default:
                throw DomainError("simplex of dimension " +
                                  std::to_string(sorted.size() - 1) +
                                  " is unsupported (max 2)");
        }
    }
    // Complete the faces so inputs given by maximal simplices work too.
    for (const auto& t : triangles) {
        edges.insert({t[0], t[1]});
        edges.insert({t[1], t[2]});
        edges.insert({t[0], t[2]});
    }
    for (const auto& e : edges) {
        vertices.insert(e[0]);
        vertices.insert(e[1]);
    }

    std::map<int, std::size_t> v_index;
    for (int v : vertices) v_index.emplace(v, v_index.size());
    std::map<std::array<int, 2>, std::size_t> e_index;
    for (const auto& e : edges) e_index.emplace(e, e_index.size());

    // d1: rows = edges, cols = vertices (rank is transpose-invariant).
    std::vector<std::vector<bool>> d1(edges.size(),
                                      std::vector<bool>(vertices.size(), false));
    {
        std::size_t r = 0;
        for (const auto& e : edges) {
            d1[r][v_index[e[0]]] = true;
            d1[r][v_index[e[1]]] = true;
            ++r;
        }
    }
    // d2: rows = triangles, cols = edges.
    std::vector<std::vector<bool>> d2(triangles.size(),
                                      std::vector<bool>(edges.size(), false));
    {
        std::size_t r = 0;
        for (const auto& t : triangles) {
            d2[r][e_index[{t[0], t[1]}]] = true;
            d2[r][e_index[{t[1], t[2]}]] = true;
            d2[r][e_index[{t[0], t[2]}]] = true;
            ++r;
        }
    }
    const int rank1 = gf2_rank(std::move(d1), vertices.size());
    const int rank2 = gf2_rank(std::move(d2), edges.size());
    const int h0 = static_cast<int>(vertices.size()) - rank1;
    const int h1 = static_cast<int>(edges.size()) - rank1 - rank2;
    return {h0, h1};
}

UnionBetti union_betti(const std::vector<Disk>& family, int resolution) {
    UnionBetti result;
    result.resolution = resolution;
    if (family.empty()) return result;
    if (resolution < 8) throw DomainError("resolution too small");

    double min_x = family[0].center.x - family[0].radius;
    double max_x = family[0].center.x + family[0].radius;
    double min_y = family[0].center.y - family[0].radius;
    double max_y = family[0].center.y + family[0].radius;
    for (const Disk& d : family) {
        min_x = std::min(min_x, d.center.x - d.radius);
        max_x = std::max(max_x, d.center.x + d.radius);
        min_y = std::min(min_y, d.center.y - d.radius);
        max_y = std::max(max_y, d.center.y + d.radius);
    }
    const double extent = std::max(max_x - min_x, max_y - min_y);
    const double cell = extent / (resolution - 4);
    min_x -= 2 * cell;
    min_y -= 2 * cell;
    const int w = static_cast<int>(std::ceil((max_x - min_x) / cell)) + 2;
    const int h = static_cast<int>(std::ceil((max_y - min_y) / cell)) + 2;

    // Feature-size heuristic: the narrowest pairwise gap or overlap (and the
    // smallest radius) must span several cells to be trusted.
    double min_feature = extent;
    for (const Disk& d : family) min_feature = std::min(min_feature, d.radius);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const double d = dist(family[i].center, family[j].center);
            const double outer = std::abs(d - (family[i].radius + family[j].radius));
            const double inner =
                std::abs(d - std::abs(family[i].radius - family[j].radius));
            if (outer > 1e-12) min_feature = std::min(min_feature, outer);
            if (inner > 1e-12) min_feature = std::min(min_feature, inner);
        }
    result.too_coarse = min_feature < 4 * cell;

    std::vector<uint8_t> fg(static_cast<std::size_t>(w) * h, 0);
    auto at = [&](int x, int y) -> uint8_t& {
        return fg[static_cast<std::size_t>(y) * w + x];
    };
    for (int y = 0; y < h; ++y) {
        const double py = min_y + (y + 0.5) * cell;
        for (int x = 0; x < w; ++x) {
            const double px = min_x + (x + 0.5) * cell;
            for (const Disk& d : family)
                if (dist({px, py}, d.center) <= d.radius) {
                    at(x, y) = 1;
                    break;
                }
        }
    }

    std::vector<int> label(fg.size(), -1);
    auto flood = [&](int sx, int sy, int mark, bool foreground) {
        std::deque<std::pair<int, int>> queue{{sx, sy}};
        label[static_cast<std::size_t>(sy) * w + sx] = mark;
        // 8-connectivity for the union, 4-connectivity for the background,
        // the standard complementary pair.
        static const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
        static const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
        const int ndirs = foreground ? 8 : 4;
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            for (int k = 0; k < ndirs; ++k) {
                const int nx = x + dx8[k];
                const int ny = y + dy8[k];
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                const std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
                if (label[idx] != -1) continue;
                if ((fg[idx] != 0) != foreground) continue;
                label[idx] = mark;
                queue.push_back({nx, ny});
            }
        }
    };

    int next = 0;
    // Outer background first: everything reachable from the border.
    for (int x = 0; x < w; ++x) {
        for (int y : {0, h - 1})
            if (!at(x, y) && label[static_cast<std::size_t>(y) * w + x] == -1)
                flood(x, y, next, false);
    }
    for (int y = 0; y < h; ++y) {
        for (int x : {0, w - 1})
            if (!at(x, y) && label[static_cast<std::size_t>(y) * w + x] == -1)
                flood(x, y, next, false);
    }
    ++next;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (label[idx] != -1) continue;
            if (fg[idx]) {
                flood(x, y, next++, true);
                ++result.h0;
            } else {
                flood(x, y, next++, false);
                ++result.h1;
            }
        }
    return result;
}

} // namespace vnerve
