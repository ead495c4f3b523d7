#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

struct SuiteConfig {
    unsigned nmax = 10;
    unsigned rmax = 3;
    std::vector<unsigned long> primes = {3, 5, 7};
    std::uint64_t seed = 0;
    // Substring filter on identity ids; empty runs everything.
    std::string filter;
    // Test hook: adds 1 to the Euler number E_k fed to identities that
    // consume the shared table, so route cross-checks must fail.
    std::optional<unsigned> perturb_euler;
};

struct SuiteResult {
    std::string id;
    std::string params;
    bool passed = false;
    // Reproducible inputs for the first failing instance; empty on pass.
    std::string counterexample;
    double millis = 0.0;
};

// Runs every registered identity (in registry order) whose id contains
// config.filter. Deterministic for a fixed config.
std::vector<SuiteResult> run_suite(const SuiteConfig& config);

// Registry order ids, for callers that need the full list.
std::vector<std::string> suite_ids();

}  // namespace umbral
