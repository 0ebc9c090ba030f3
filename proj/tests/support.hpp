#pragma once

#include <cmath>
#include <string>

#include "doctest.h"
#include "hypbeta/complex.hpp"
#include "hypbeta/errors.hpp"
#include "hypbeta/selftest.hpp"

namespace testing {

using hypbeta::cplx;

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

template <class F>
hypbeta::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const hypbeta::Error& e) {
        return e.kind();
    }
    FAIL("expected a hypbeta::Error");
    return hypbeta::ErrorKind::QuadratureFailure;
}

// Runs the invariants under a prefix and checks each one separately.
inline void check_invariants(const std::string& filter, int grid = 20) {
    hypbeta::SelftestOptions o;
    o.filter = filter;
    o.grid = grid;
    const auto rs = hypbeta::run_invariants(o);
    REQUIRE_FALSE(rs.empty());
    for (const auto& r : rs) {
        INFO(r.module << "." << r.name << " residual " << r.residual << " bound " << r.bound << " " << r.note);
        CHECK(r.pass);
    }
}

}  // namespace testing
