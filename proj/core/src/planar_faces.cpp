#include "planar_faces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace vnerve::detail {

namespace {

struct DirectedEdge {
    int from;
    int to;
};

struct DsuState {
    std::vector<int> parent;
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int component_count(const CellComplex& E, std::vector<int>* labels_by_index) {
    const auto& vs = E.vertices();
    std::map<int, int> index_of;
    for (std::size_t i = 0; i < vs.size(); ++i) index_of[vs[i].id] = static_cast<int>(i);

    DsuState dsu;
    dsu.parent.resize(vs.size());
    std::iota(dsu.parent.begin(), dsu.parent.end(), 0);
    for (const Edge& e : E.edges()) dsu.unite(index_of.at(e.a), index_of.at(e.b));

    std::map<int, int> relabel; // root -> compact label, ordered by first vertex
    std::vector<int> labels(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const int root = dsu.find(static_cast<int>(i));
        auto [it, inserted] = relabel.try_emplace(root, static_cast<int>(relabel.size()));
        labels[i] = it->second;
    }
    if (labels_by_index) *labels_by_index = labels;
    return static_cast<int>(relabel.size());
}

std::vector<FaceWalk> trace_faces(const CellComplex& E) {
    const auto& vs = E.vertices();
    std::map<int, int> index_of;
    for (std::size_t i = 0; i < vs.size(); ++i) index_of[vs[i].id] = static_cast<int>(i);

    std::vector<int> comp;
    component_count(E, &comp);

    // Directed edges, two per undirected edge, in deterministic order.
    std::vector<DirectedEdge> halves;
    halves.reserve(E.edges().size() * 2);
    for (const Edge& e : E.edges()) {
        halves.push_back({e.a, e.b});
        halves.push_back({e.b, e.a});
    }

    // Rotation system: neighbors of each vertex sorted CCW by angle.
    std::map<int, std::vector<int>> neighbors;
    for (const Edge& e : E.edges()) {
        neighbors[e.a].push_back(e.b);
        neighbors[e.b].push_back(e.a);
    }
    for (auto& [v, around] : neighbors) {
        const Point pv = E.position(v);
        std::sort(around.begin(), around.end(), [&](int p, int q) {
            const Point a = E.position(p) - pv;
            const Point b = E.position(q) - pv;
            const double ta = std::atan2(a.y, a.x);
            const double tb = std::atan2(b.y, b.x);
            if (ta != tb) return ta < tb;
            return p < q;
        });
    }

    std::map<std::pair<int, int>, int> half_index;
    for (std::size_t i = 0; i < halves.size(); ++i)
        half_index[{halves[i].from, halves[i].to}] = static_cast<int>(i);

    // next(u->v): the clockwise predecessor of (v->u) in v's rotation.
    auto next_half = [&](int h) {
        const int u = halves[h].from;
        const int v = halves[h].to;
        const auto& around = neighbors.at(v);
        const auto it = std::find(around.begin(), around.end(), u);
        const std::size_t p = static_cast<std::size_t>(it - around.begin());
        const int w = around[(p + around.size() - 1) % around.size()];
        return half_index.at({v, w});
    };

    std::vector<bool> used(halves.size(), false);
    std::vector<FaceWalk> faces;
    for (std::size_t start = 0; start < halves.size(); ++start) {
        if (used[start]) continue;
        FaceWalk walk;
        walk.component = comp[static_cast<std::size_t>(index_of.at(halves[start].from))];
        int h = static_cast<int>(start);
        std::vector<Point> pts;
        do {
            used[static_cast<std::size_t>(h)] = true;
            walk.vertices.push_back(halves[static_cast<std::size_t>(h)].from);
            pts.push_back(E.position(halves[static_cast<std::size_t>(h)].from));
            h = next_half(h);
        } while (h != static_cast<int>(start));
        walk.area = signed_area(pts);
        faces.push_back(std::move(walk));
    }

    // Classify per component: a lone face is the unbounded one; otherwise
    // the face with the most negative area is.
    std::map<int, std::vector<std::size_t>> by_comp;
    for (std::size_t i = 0; i < faces.size(); ++i) by_comp[faces[i].component].push_back(i);
    for (const auto& [c, idxs] : by_comp) {
        if (idxs.size() == 1) {
            faces[idxs[0]].bounded = false;
            continue;
        }
        std::size_t outer = idxs[0];
        for (std::size_t i : idxs)
            if (faces[i].area < faces[outer].area) outer = i;
        for (std::size_t i : idxs) faces[i].bounded = (i != outer);
    }
    return faces;
}

} // namespace vnerve::detail
