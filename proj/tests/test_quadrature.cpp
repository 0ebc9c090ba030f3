#include "doctest.h"
#include "hypbeta/quadrature.hpp"
#include "hypbeta/tau.hpp"
#include "support.hpp"

using namespace hypbeta;
using testing::rel;

TEST_CASE("segment integrals") {
    const QuadratureValue a = integrate_segment([](cplx x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(a.value - (std::exp(1.0) - 1.0)) < 1e-13);
    CHECK(a.err_est < 1e-10);
    CHECK(a.evals > 0);
    // complex endpoints
    const QuadratureValue b = integrate_segment([](cplx z) { return z * z; }, cplx(0, 0), cplx(1, 1), 1e-12);
    CHECK(rel(b.value, std::pow(cplx(1, 1), 3) / 3.0) < 1e-13);
    // endpoint singularity
    const QuadratureValue c = integrate_segment([](cplx x) { return std::log(x); }, 0.0, 1.0, 1e-10);
    CHECK(std::abs(c.value + 1.0) < 1e-9);
}

TEST_CASE("line integrals with Gaussian decay") {
    for (cplx tau : {cplx(0, 1), cplx(0.5, 0.5)}) {
        const TauParameter tp(tau);
        const QuadratureValue v = integrate_line([&](cplx x) { return std::exp(tp.log_q_pow(x * x / 2.0)); },
                                                 Contour::real_line(), 0.0, 1e-11);
        CHECK(rel(v.value, 1.0 / tp.sqrt_mit()) < 1e-10);
        CHECK(v.contour.truncation_radius > 0.0);
    }
    const QuadratureValue s = integrate_line([](cplx x) { return 1.0 / std::cosh(pi * x); }, Contour::real_line(), pi,
                                             1e-11);
    CHECK(std::abs(s.value - 1.0) < 1e-10);
}

TEST_CASE("shifted line and circle") {
    const QuadratureValue v =
        integrate_line([](cplx x) { return std::exp(-x * x); }, Contour::shifted_line(0.3), 0.0, 1e-11);
    CHECK(rel(v.value, std::sqrt(pi)) < 1e-10);
    const QuadratureValue c = integrate_circle([](cplx z) { return std::exp(z + 1.0 / z); }, 1e-12);
    CHECK(rel(c.value, std::cyl_bessel_i(0.0, 2.0)) < 1e-12);
}

TEST_CASE("quadrature failures") {
    CHECK(testing::kind_of([] {
              integrate_segment([](cplx x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-10);
          }) == ErrorKind::NonFiniteSample);
    CHECK(testing::kind_of([] {
              integrate_line([](cplx) { return cplx(1.0); }, Contour::real_line(), 0.0, 1e-10);
          }) == ErrorKind::NoDecayDetected);
}

TEST_CASE("quadrature invariants") { testing::check_invariants("quadrature"); }
