#ifndef VNERVE_PROXIMITY_HPP
#define VNERVE_PROXIMITY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vnerve/cell_complex.hpp"
#include "vnerve/report.hpp"

namespace vnerve {

/// Real-valued description of a sub-complex. Integer-valued vectors (counts)
/// compare exactly; others componentwise within eps.
struct FeatureVector {
    std::vector<double> components;
    bool integer_valued = false;

    bool matches(const FeatureVector& other, double eps) const;
    std::string str() const; // "(1)" or "(2,0.5)"
};

/// Named, fixed-arity description map over sub-complexes.
///
/// Probes are expected to be deterministic; `cacheable` declares that, and
/// lets the axiom checker reuse evaluations. A non-cacheable probe is
/// re-evaluated on every use, which is what exposes nondeterministic
/// evaluators as axiom violations.
class Probe {
public:
    using Evaluator = std::function<FeatureVector(const CellComplex&)>;

    Probe(std::string name, int arity, Evaluator evaluator,
          bool integer_valued = false, bool cacheable = true);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    bool integer_valued() const { return integer_valued_; }
    bool cacheable() const { return cacheable_; }

    /// Evaluates and validates the arity; throws ProbeError on mismatch.
    FeatureVector operator()(const CellComplex& x) const;

private:
    std::string name_;
    int arity_;
    Evaluator evaluator_;
    bool integer_valued_;
    bool cacheable_;
};

/// hole-count, cycle-count, cell-count, area, centroid.
const std::vector<Probe>& builtin_probes();
const Probe& probe_by_name(const std::string& name);

using Collection = std::vector<CellComplex>;

/// Elements of A ∪ B whose description occurs in both collections.
struct DescriptiveIntersection {
    Collection elements;                 // deduplicated ground set A ∪ B
    std::vector<std::size_t> matched;    // indices into elements

    bool empty() const { return matched.empty(); }
};

DescriptiveIntersection descriptive_intersection(const Collection& A, const Collection& B,
                                                 const Probe& probe,
                                                 double eps = kDefaultTolerance);

/// δ_Φ: descriptively close iff the descriptive intersection is nonempty.
bool dnear(const Collection& A, const Collection& B, const Probe& probe,
           double eps = kDefaultTolerance);

struct DescriptiveProximitySpace {
    Collection universe;
    Probe probe;
    double eps = kDefaultTolerance;
};

/// Samples sub-collections A, B, C of the universe and checks dP0 (empty set
/// far), dP1 (symmetry), dP2 with its converse (the nearness/intersection
/// biconditional, evaluated against a brute-force double loop), and dP3
/// (union distributivity). Counterexamples are recorded with witnesses.
AxiomReport check_axioms(const DescriptiveProximitySpace& space, int trials,
                         std::uint64_t seed);

} // namespace vnerve

#endif
