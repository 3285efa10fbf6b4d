#ifndef ORBITOPE_REPORTS_HPP
#define ORBITOPE_REPORTS_HPP

#include <string>
#include <vector>

#include "orbitope/chambers.hpp"
#include "orbitope/homology.hpp"

// Deterministic report payloads. Each carries a versioned schema tag, an
// assertion list with stable anchor ids, and canonical JSON: identical
// inputs serialize to identical bytes (no timestamps, fixed key order).

namespace orbitope::reports {

struct Assertion {
    std::string name;
    std::string anchor;    // stable id, e.g. "keel/quotient/n6"
    std::string expected;  // empty for informational entries
    std::string actual;
    bool pass = true;
    bool informational = false;  // reported but never fails the run
};

struct Report {
    bool pass = true;  // conjunction of non-informational assertions
    std::string json;
    std::string markdown;
    std::vector<Assertion> assertions;
};

// Every payload embeds the requested engine mode so golden files
// self-describe, even where the computation itself is mode-independent.

// Polytope inventory with frozen count assertions.
Report admissible_report(int n, const std::string& mode = "paper");

// Chamber census with frozen count and distribution assertions.
Report chambers_report(const chambers::ChamberSet& set, const std::string& mode = "paper");

// Divisor presentation with the closed-form quotient assertion. n >= 4.
Report keel_report(int n, const std::string& mode = "paper");

// Divisor dictionary, its structural verification, and the chamber
// partition check. set.n must be 5 or 6.
Report dict_report(const chambers::ChamberSet& set, const std::string& mode = "paper");

// Betti table for set.n in {5, 6}. In exhaustive mode the degree-6 entry of
// the rank-6 table is reported as informational rather than asserted.
Report betti_report(const chambers::ChamberSet& set, const std::string& mode);

// Full invariant suite for set.n: every report above that applies, plus the
// structural degree checks.
Report verify_report(const chambers::ChamberSet& set, const std::string& mode);

}  // namespace orbitope::reports

#endif  // ORBITOPE_REPORTS_HPP
