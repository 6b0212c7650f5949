#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bh/estimation.hpp"

namespace bh {

// One checked expectation of a scenario, with the observed outcome.
struct ExpectationResult {
    std::string description;
    bool passed = false;
    double observed = 0.0;
    double expected = 0.0;
};

struct ScenarioReport {
    std::string name;
    std::vector<ExpectationResult> results;
    bool all_passed = true;
};

std::vector<std::string> scenario_names();

// Runs a named counterexample scenario with the given budget/seed and
// verifies every hard-coded expectation.  Throws std::invalid_argument
// for unregistered names.
ScenarioReport run_scenario(const std::string& name, int budget = 10000,
                            std::uint64_t seed = 42);

} // namespace bh
