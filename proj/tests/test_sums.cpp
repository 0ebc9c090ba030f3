#include "doctest.h"
#include "hypbeta/sums.hpp"
#include "support.hpp"

using namespace hypbeta;
using testing::rel;

TEST_CASE("theta_inverse is theta at -1/tau") {
    const TauParameter tp(cplx(0.3, 0.8));
    const cplx z(0.2, 0.1);
    CHECK(rel(theta_inverse(z, tp), theta(z, -1.0 / tp.tau()).value) < 1e-14);
}

TEST_CASE("folded Gaussian reproduces theta at -1/tau") {
    const TauParameter tp(cplx(0, 0.4));
    CHECK(jacobi_inversion_residual(0.0, tp) < 1e-13);
    CHECK(jacobi_inversion_residual(cplx(0.3, 0.1), tp) < 1e-13);
}

TEST_CASE("summation closed forms at sample points") {
    const TauParameter t3(cplx(0, 0.3));
    CHECK(ramanujan_1psi1_residual(0.1, 0.5, cplx(0.3, 0.1), t3) < 1e-10);
    CHECK(bailey_6psi6_residual(0.2, {0.24, 0.2, 0.1, cplx(0, 0.15)}, t3) < 1e-10);
    const cplx t(0.8, -0.1);
    const Weak8Psi8Data d = make_weak8psi8({t, t, t, t, t}, t3);
    CHECK(key_lemma_residual(d) < 1e-10);
    CHECK(rel(key_lemma_lhs(d), key_lemma_rhs(d)) < 1e-10);
}

TEST_CASE("weak 8psi8 data rejects a real tau") {
    CHECK(testing::kind_of([] { make_weak8psi8({0.8, 0.8, 0.8, 0.8, 0.8}, TauParameter(cplx(-1, 0))); }) ==
          ErrorKind::NomeOutOfRange);
}

TEST_CASE("Askey-Wilson polynomials") {
    const AWParameterSet p{{0.3, 0.2, -0.1, cplx(0, 0.2)}, 0.1};
    CHECK(aw_polynomial(0, 0.37, p) == 1.0);
    // p_1 is linear in cos(2 pi x)
    const cplx a = aw_polynomial(1, 0.0, p), b = aw_polynomial(1, 0.25, p), c = aw_polynomial(1, 0.5, p);
    CHECK(std::abs(b - 0.5 * (a + c)) < 1e-13);
}

TEST_CASE("Askey-Wilson orthogonality") {
    const TauParameter ti(cplx(0, 1));
    const std::array<cplx, 4> tj{cplx(0.9, -0.1), cplx(0.9, -0.1), cplx(0.9, -0.1), cplx(0.9, -0.1)};
    const PairingValue g00 = aw_orthogonality(0, 0, tj, ti), g11 = aw_orthogonality(1, 1, tj, ti);
    const PairingValue g01 = aw_orthogonality(0, 1, tj, ti);
    CHECK(std::abs(g01.value) <= 1e-6 * std::sqrt(std::abs(g00.value) * std::abs(g11.value)));
    CHECK(g00.scale > 0.0);
}

TEST_CASE("sums invariants") { testing::check_invariants("sums"); }
