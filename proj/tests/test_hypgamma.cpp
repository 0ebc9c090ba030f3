#include <numbers>

#include "doctest.h"
#include "hypbeta/hypgamma.hpp"
#include "support.hpp"

using namespace hypbeta;
using testing::rel;

TEST_CASE("gamma_h at a half period") {
    // a+ = 1, a- = 2: sqrt(a-/a+)
    CHECK(rel(gamma_h({1.0, 2.0}, cplx(0, 0.5)), std::sqrt(2.0)) < 1e-13);
    // in general the difference equation at z = 0 with Gamma_h(z) Gamma_h(-z) = 1 gives sqrt(2)
    CHECK(rel(gamma_h({1.3, 0.8}, cplx(0, 0.65)), std::sqrt(2.0)) < 1e-13);
    CHECK(rel(gamma_h({1.3, 0.8}, cplx(0, 0.4)), std::sqrt(2.0)) < 1e-13);
    CHECK(rel(gamma_h({cplx(1, 0.3), 0.9}, I * cplx(1, 0.3) / 2.0), std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("gamma_h against the defining integral") {
    CHECK(rel(gamma_h({1.0, 1.3}, cplx(0.4, 0.2)), cplx(1.1845457629913462, -0.45994527478694686)) < 1e-13);
    CHECK(rel(gamma_h({0.7, 1.6}, cplx(-1.5, 0.3)), cplx(-3.4333845991395081, -0.85377758036878908)) < 1e-13);
    CHECK(rel(gamma_h({cplx(1, 0.2), cplx(0.9, -0.1)}, cplx(0.3, -0.2)),
              cplx(0.73444542152980942, -0.21490699050838434)) < 1e-13);
    // the integral path alone, inside the strip
    CHECK(rel(gamma_h({1.0, 1.3}, cplx(0.4, 0.2), 1e-14, GammaMethod::integral),
              cplx(1.1845457629913462, -0.45994527478694686)) < 1e-13);
}

TEST_CASE("gamma_h outside the strip uses the difference equation") {
    const HyperbolicPair p{1.0, 1.3};
    const cplx z(0.4, 2.7);
    const cplx lhs = gamma_h(p, z + I * 0.5) / gamma_h(p, z - I * 0.5);
    CHECK(rel(lhs, 2.0 * std::cosh(pi * z / 1.3)) < 1e-11);
    GammaDiagnostics d;
    log_gamma_h(p, z, 1e-14, GammaMethod::automatic, &d);
    CHECK(d.shift_steps > 0);
}

TEST_CASE("gamma_h zeros and poles") {
    CHECK(std::abs(gamma_h({1.0, 2.0}, cplx(0, 1.5))) == 0.0);
    CHECK(testing::kind_of([] { gamma_h({1.0, 2.0}, cplx(0, -1.5)); }) == ErrorKind::AtPole);
    CHECK(testing::kind_of([] { gamma_h({-1.0, 2.0}, 0.1); }) == ErrorKind::ParameterOutOfRange);
    CHECK(testing::kind_of([] { gamma_h_product({1.0, 2.0}, 0.1); }) == ErrorKind::DegenerateRatio);
    const PoleZeroList pz = gamma_h_pole_zero({1.0, 2.0});
    CHECK(lattice_distance(pz.zeros, cplx(0, 1.5)) < 1e-14);
    CHECK(lattice_distance(pz.poles, cplx(0, -1.5)) < 1e-14);
}

TEST_CASE("tau factorial against reference values") {
    CHECK(rel(tau_factorial(cplx(0.2, 0.1), TauParameter(cplx(0.3, 1.1))),
              cplx(0.69495778671100869, 2.1870933253027078)) < 1e-13);
    CHECK(rel(tau_factorial(cplx(-0.7, 0.3), TauParameter(cplx(-0.2, 0.9))),
              cplx(0.013706509187140366, -0.07789388653217103)) < 1e-13);
    CHECK(rel(tau_factorial(cplx(0.3, 0.2), TauParameter(cplx(-std::numbers::sqrt2, 0.0))),
              cplx(1.2119309988464206, 0.74058257650490414)) < 1e-13);
}

TEST_CASE("tau factorial: both representations agree where both apply") {
    const TauParameter tp(cplx(-0.7, 0.4));
    for (cplx z : {cplx(0.1, 0.05), cplx(-0.4, 0.2), cplx(0.6, -0.1)}) {
        const cplx a = tau_factorial(z, tp, 1e-14, FactorialPath::trigonometric);
        const cplx b = tau_factorial(z, tp, 1e-14, FactorialPath::hyperbolic);
        CHECK(rel(a, b) < 1e-11);
    }
}

TEST_CASE("tau factorial zero lattice") {
    const TauParameter tp(cplx(-1.41421356, 0.0));
    CHECK(tau_factorial(1.0, tp) == 0.0);
    CHECK(tau_factorial(2.0, tp) == 0.0);
    CHECK(testing::kind_of([] { tau_factorial(0.2, TauParameter(cplx(0.5, 0.0))); }) ==
          ErrorKind::RegimeUnsupported);
}

TEST_CASE("elliptic gamma against the double product") {
    CHECK(rel(elliptic_gamma(cplx(0.5, 0.3), 0.2, cplx(0, 0.3)), cplx(1.3089897176068835, 0.94787848287849644)) <
          1e-13);
    CHECK(testing::kind_of([] { elliptic_gamma(0.5, 1.2, 0.3); }) == ErrorKind::BaseOutOfRange);
    CHECK(testing::kind_of([] { elliptic_gamma(0.0, 0.2, 0.3); }) == ErrorKind::AtPole);
}

TEST_CASE("renormalized elliptic gamma tends to its limit") {
    const cplx z(0.3, 0.1);
    const double tau = -std::numbers::sqrt2;
    const cplx lim = renorm_elliptic_gamma_limit(z, tau);
    double prev = 1e300;
    for (double r : {0.2, 0.1, 0.05}) {
        const double d = std::abs(renorm_elliptic_gamma(z, tau, r) - lim);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("hypgamma invariants") { testing::check_invariants("hypgamma"); }
