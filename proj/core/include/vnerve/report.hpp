#ifndef VNERVE_REPORT_HPP
#define VNERVE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace vnerve {

struct ReportEntry {
    std::string claim;   // stable identifier, e.g. "closure[2]" or "dP1"
    bool ok = true;
    std::string witness; // human-readable evidence for failures (or context)
};

/// Outcome of a structural check. Violations are entries, not exceptions.
struct ConditionReport {
    std::vector<ReportEntry> entries;

    bool pass() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }

    void add(std::string claim, bool ok, std::string witness = "") {
        entries.push_back({std::move(claim), ok, std::move(witness)});
    }
};

struct AxiomReport : ConditionReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::string probe_name;
};

} // namespace vnerve

#endif
