#pragma once

#include <cstdint>

#include "addtop/monoidal.hpp"
#include "addtop/properties.hpp"

namespace addtop {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> notes;    // evidence lines
    std::vector<std::string> failures; // empty iff passed
};

// The bundled verification suites, one per acceptance-level claim.
const std::vector<std::string>& suiteNames();

SuiteResult runSuite(const std::string& name, std::uint64_t seed = 1);
std::vector<SuiteResult> runAllSuites(std::uint64_t seed = 1);

} // namespace addtop
