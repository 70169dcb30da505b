#include "vnerve/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "vnerve/betti.hpp"
#include "vnerve/cycles.hpp"
#include "vnerve/error.hpp"

namespace vnerve {

bool FeatureVector::matches(const FeatureVector& other, double eps) const {
    if (components.size() != other.components.size()) return false;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (integer_valued && other.integer_valued) {
            if (components[i] != other.components[i]) return false;
        } else if (std::abs(components[i] - other.components[i]) > eps) {
            return false;
        }
    }
    return true;
}

std::string FeatureVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) os << ",";
        if (integer_valued)
            os << static_cast<long long>(components[i]);
        else
            os << components[i];
    }
    os << ")";
    return os.str();
}

Probe::Probe(std::string name, int arity, Evaluator evaluator, bool integer_valued,
             bool cacheable)
    : name_(std::move(name)),
      arity_(arity),
      evaluator_(std::move(evaluator)),
      integer_valued_(integer_valued),
      cacheable_(cacheable) {}

FeatureVector Probe::operator()(const CellComplex& x) const {
    FeatureVector v = evaluator_(x);
    if (static_cast<int>(v.components.size()) != arity_)
        throw ProbeError("probe " + name_ + " produced arity " +
                         std::to_string(v.components.size()) + ", expected " +
                         std::to_string(arity_));
    v.integer_valued = integer_valued_;
    return v;
}

namespace {

double polygon_area_abs(const CellComplex& E, const std::vector<int>& boundary) {
    if (boundary.size() < 3) return 0.0;
    return std::abs(signed_area(E.polyline(boundary)));
}

double triangle_area(const CellComplex& E, const Triangle& t) {
    const Point a = E.position(t.corners[0]);
    const Point b = E.position(t.corners[1]);
    const Point c = E.position(t.corners[2]);
    return std::abs(cross(b - a, c - a)) / 2.0;
}

} // namespace

const std::vector<Probe>& builtin_probes() {
    static const std::vector<Probe> probes = {
        Probe("hole-count", 1,
              [](const CellComplex& E) {
                  int holes = 0;
                  for (const FilledCycle& c : E.declared_cycles())
                      if (c.hole) ++holes;
                  return FeatureVector{{static_cast<double>(holes)}};
              },
              /*integer_valued=*/true),
        Probe("cycle-count", 1,
              [](const CellComplex& E) {
                  return FeatureVector{
                      {static_cast<double>(find_cycles(E).size())}};
              },
              /*integer_valued=*/true),
        Probe("cell-count", 1,
              [](const CellComplex& E) {
                  return FeatureVector{{static_cast<double>(E.cell_count())}};
              },
              /*integer_valued=*/true),
        Probe("area", 1,
              [](const CellComplex& E) {
                  // Filled area: declared non-hole filled cycle regions plus
                  // 2-cells.
                  double area = 0.0;
                  for (const FilledCycle& c : E.declared_cycles())
                      if (c.filled && !c.hole) area += polygon_area_abs(E, c.boundary);
                  for (const Triangle& t : E.triangles()) area += triangle_area(E, t);
                  return FeatureVector{{area}};
              }),
        Probe("centroid", 2, [](const CellComplex& E) {
            Point acc{0.0, 0.0};
            if (!E.vertices().empty()) {
                for (const Vertex& v : E.vertices()) acc = acc + v.pos();
                acc = (1.0 / static_cast<double>(E.vertices().size())) * acc;
            }
            return FeatureVector{{acc.x, acc.y}};
        }),
    };
    return probes;
}

const Probe& probe_by_name(const std::string& name) {
    for (const Probe& p : builtin_probes())
        if (p.name() == name) return p;
    throw ProbeError("unknown probe '" + name + "'");
}

namespace {

std::string complex_key(const CellComplex& E) {
    std::ostringstream os;
    for (const Vertex& v : E.vertices()) os << "v" << v.id << ":" << v.x << "," << v.y << ";";
    for (const Edge& e : E.edges()) os << "e" << e.a << "," << e.b << ";";
    for (const Triangle& t : E.triangles())
        os << "t" << t.corners[0] << "," << t.corners[1] << "," << t.corners[2] << ";";
    for (const FilledCycle& c : E.declared_cycles()) {
        os << "c";
        for (int id : c.canonical_boundary()) os << id << ",";
        os << (c.filled ? "f" : "-") << (c.hole ? "h" : "-") << ";";
    }
    for (const Edge& e : E.attached_edges()) os << "a" << e.a << "," << e.b << ";";
    return os.str();
}

} // namespace

DescriptiveIntersection descriptive_intersection(const Collection& A, const Collection& B,
                                                 const Probe& probe, double eps) {
    DescriptiveIntersection out;
    std::vector<std::string> keys;
    std::vector<bool> in_a, in_b;
    auto add = [&](const CellComplex& x, bool a_side) {
        const std::string key = complex_key(x);
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == key) {
                (a_side ? in_a : in_b)[i] = true;
                return;
            }
        keys.push_back(key);
        out.elements.push_back(x);
        in_a.push_back(a_side);
        in_b.push_back(!a_side);
    };
    for (const CellComplex& x : A) add(x, true);
    for (const CellComplex& x : B) add(x, false);

    // Description sets are evaluated side by side: Phi(A) first, Phi(B)
    // second, then the membership scan.
    std::vector<FeatureVector> descriptions(out.elements.size());
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        descriptions[i] = probe(out.elements[i]);

    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        bool matches_a = false, matches_b = false;
        for (std::size_t j = 0; j < out.elements.size(); ++j) {
            if (in_a[j] && descriptions[i].matches(descriptions[j], eps)) matches_a = true;
            if (in_b[j] && descriptions[i].matches(descriptions[j], eps)) matches_b = true;
        }
        if (matches_a && matches_b) out.matched.push_back(i);
    }
    return out;
}

bool dnear(const Collection& A, const Collection& B, const Probe& probe, double eps) {
    return !descriptive_intersection(A, B, probe, eps).empty();
}

namespace {

struct AxiomEngine {
    const Collection& universe;
    const Probe& probe;
    double eps;
    std::vector<FeatureVector> cache;
    std::vector<bool> cached;

    AxiomEngine(const Collection& u, const Probe& p, double e)
        : universe(u), probe(p), eps(e), cache(u.size()), cached(u.size(), false) {}

    FeatureVector describe(std::size_t idx) {
        if (probe.cacheable() && cached[idx]) return cache[idx];
        FeatureVector v = probe(universe[idx]);
        if (probe.cacheable()) {
            cache[idx] = v;
            cached[idx] = true;
        }
        return v;
    }

    // Implementation route: build the description sets, then scan membership.
    bool near(const std::vector<std::size_t>& A, const std::vector<std::size_t>& B) {
        if (A.empty() || B.empty()) return false;
        std::vector<FeatureVector> da, db;
        da.reserve(A.size());
        db.reserve(B.size());
        for (std::size_t i : A) da.push_back(describe(i));
        for (std::size_t i : B) db.push_back(describe(i));
        auto in_set = [&](const FeatureVector& v, const std::vector<FeatureVector>& set) {
            for (const FeatureVector& s : set)
                if (v.matches(s, eps)) return true;
            return false;
        };
        for (const FeatureVector& v : da)
            if (in_set(v, da) && in_set(v, db)) return true;
        for (const FeatureVector& v : db)
            if (in_set(v, da) && in_set(v, db)) return true;
        return false;
    }

    // Oracle route: direct double loop over member pairs.
    bool near_oracle(const std::vector<std::size_t>& A, const std::vector<std::size_t>& B) {
        for (std::size_t a : A)
            for (std::size_t b : B)
                if (describe(a).matches(describe(b), eps)) return true;
        return false;
    }
};

std::string indices_str(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

} // namespace

AxiomReport check_axioms(const DescriptiveProximitySpace& space, int trials,
                         std::uint64_t seed) {
    AxiomReport report;
    report.seed = seed;
    report.trials = trials;
    report.probe_name = space.probe.name();
    if (space.universe.empty()) {
        report.add("universe", false, "empty universe");
        return report;
    }

    std::mt19937_64 rng(seed);
    const std::size_t n = space.universe.size();
    auto uniform_index = [&](std::size_t bound) {
        return static_cast<std::size_t>(rng() % bound);
    };
    auto sample_collection = [&]() {
        const std::size_t size = 1 + uniform_index(std::min<std::size_t>(4, n));
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < size; ++i) idx.push_back(uniform_index(n));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        return idx;
    };

    AxiomEngine engine(space.universe, space.probe, space.eps);
    int fail_dp0 = 0, fail_dp1 = 0, fail_dp2 = 0, fail_dp3 = 0;
    std::string w_dp0, w_dp1, w_dp2, w_dp3;

    for (int t = 0; t < trials; ++t) {
        const auto A = sample_collection();
        const auto B = sample_collection();
        const auto C = sample_collection();

        if (engine.near({}, A)) {
            if (fail_dp0++ == 0) w_dp0 = "A=" + indices_str(A);
        }
        const bool ab = engine.near(A, B);
        const bool ba = engine.near(B, A);
        if (ab != ba) {
            if (fail_dp1++ == 0) w_dp1 = "A=" + indices_str(A) + " B=" + indices_str(B);
        }
        const bool oracle = engine.near_oracle(A, B);
        if (ab != oracle) {
            if (fail_dp2++ == 0)
                w_dp2 = "A=" + indices_str(A) + " B=" + indices_str(B) + " dnear=" +
                        (ab ? "true" : "false") + " intersection-nonempty=" +
                        (oracle ? "true" : "false");
        }
        std::vector<std::size_t> BC = B;
        BC.insert(BC.end(), C.begin(), C.end());
        std::sort(BC.begin(), BC.end());
        BC.erase(std::unique(BC.begin(), BC.end()), BC.end());
        const bool lhs = engine.near(A, BC);
        const bool rhs = engine.near(A, B) || engine.near(A, C);
        if (lhs != rhs) {
            if (fail_dp3++ == 0)
                w_dp3 = "A=" + indices_str(A) + " B=" + indices_str(B) +
                        " C=" + indices_str(C);
        }
    }

    auto summarize = [&](const std::string& claim, int fails, const std::string& witness) {
        report.add(claim, fails == 0,
                   fails == 0 ? ""
                              : std::to_string(fails) + " counterexamples, first: " + witness);
    };
    summarize("dP0", fail_dp0, w_dp0);
    summarize("dP1", fail_dp1, w_dp1);
    summarize("dP2-and-converse", fail_dp2, w_dp2);
    summarize("dP3", fail_dp3, w_dp3);
    return report;
}

} // namespace vnerve
