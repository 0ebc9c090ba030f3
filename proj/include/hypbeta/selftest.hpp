#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hypbeta {

struct InvariantResult {
    std::string module;
    std::string name;
    double residual = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string note;
};

struct SelftestOptions {
    std::string filter;        // module name or invariant name prefix; empty runs all
    double perturb = 0.0;      // relative sabotage applied to the reflection-equation constant
    int grid = 20;             // random points per grid invariant
    std::uint64_t seed = 20240611;
};

// Runs the invariant suite in a fixed order; on_result sees each result as it completes.
std::vector<InvariantResult> run_invariants(const SelftestOptions& opt,
                                            const std::function<void(const InvariantResult&)>& on_result = {});

std::vector<std::string> invariant_modules();

}  // namespace hypbeta
