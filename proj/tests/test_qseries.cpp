#include "doctest.h"
#include "hypbeta/qseries.hpp"
#include "support.hpp"

using namespace hypbeta;
using testing::rel;

// reference values: tests/oracle/gen_oracle.py (mpmath, 40 digits)

TEST_CASE("qpoch_inf against reference values") {
    CHECK(rel(qpoch_inf(0.5, 0.3).value, cplx(0.39808220430187767, 0.0)) < 1e-14);
    CHECK(rel(qpoch_inf(cplx(0.3, 0.4), cplx(-0.2, 0.6)).value, cplx(0.88950472941437128, -0.45018384882641898)) <
          1e-14);
    CHECK(rel(qpoch_inf(cplx(2, -1), cplx(0.1, 0.2)).value, cplx(-0.21104428560985764, 0.97717402009763007)) <
          1e-14);
}

TEST_CASE("qpoch_inf hits exact zeros") {
    const cplx q = 0.4;
    CHECK(std::abs(qpoch_inf(1.0 / (q * q), q).value) == 0.0);
    const LogValue l = log_qpoch(1.0 / (q * q), q);
    CHECK(l.order == 1);
    CHECK(qpoch_finite(0.3, q, 0) == 1.0);
    CHECK(rel(qpoch_finite(0.3, q, 3), (1.0 - 0.3) * (1.0 - 0.3 * q) * (1.0 - 0.3 * q * q)) < 1e-15);
}

TEST_CASE("log_qpoch_exp keeps accuracy next to a zero factor") {
    // a = 1 - 1e-12: the first factor is 1e-12 and must not lose digits
    const cplx la = hypbeta::log1p(cplx(-1e-12));
    const LogValue v = log_qpoch_exp(la, std::log(cplx(0.5)));
    CHECK(rel(v.value(), 1e-12 * qpoch_inf(0.5, 0.5).value) < 1e-9);
}

TEST_CASE("qpoch_alpha reduces to a finite product at integer alpha") {
    const cplx q(0.2, 0.3), z(0.4, -0.1);
    CHECK(rel(qpoch_alpha(z, q, 3.0).value, qpoch_finite(z, q, 3)) < 1e-13);
}

TEST_CASE("theta against reference values") {
    CHECK(rel(theta(0.0, cplx(0, 1)).value, cplx(1.086434811213308, 0.0)) < 1e-15);
    CHECK(rel(theta(cplx(0.2, 0.1), cplx(0.3, 0.8)).value, cplx(1.1190629224196396, -0.011815185759841761)) < 1e-14);
    CHECK(rel(theta(cplx(0.2, 0.1), cplx(0.3, 0.8), ThetaMethod::triple_product).value,
              cplx(1.1190629224196396, -0.011815185759841761)) < 1e-14);
}

TEST_CASE("dedekind eta against reference values") {
    CHECK(rel(dedekind_eta(cplx(0, 1)), cplx(0.76822542232605666, 0.0)) < 1e-15);
    CHECK(rel(dedekind_eta(cplx(0.25, 0.6)), cplx(0.85454804673046147, 0.03626489483342764)) < 1e-14);
}

TEST_CASE("unilateral and bilateral series against reference values") {
    CHECK(rel(phi_series({0.3, 0.5}, {0.7}, 0.4, 0.6).value, cplx(4.289750861667436, 0.0)) < 1e-14);
    const SeriesValue b = bilateral_psi({0.5}, {cplx(0, 0.3)}, 0.3, 0.7);
    CHECK(rel(b.value, cplx(0.31380908790390314, 0.26140312424021446)) < 1e-13);
    CHECK(b.converged);
}

TEST_CASE("extended precision variants agree with double precision") {
    using ext::lcplx;
    const cplx a(0.3, 0.4), q(-0.2, 0.6);
    const lcplx e = ext::qpoch_inf(lcplx(a.real(), a.imag()), lcplx(q.real(), q.imag()));
    CHECK(rel(cplx(double(e.real()), double(e.imag())), qpoch_inf(a, q).value) < 1e-14);
    const lcplx t = ext::theta(lcplx(0.2L, 0.1L), lcplx(0.3L, 0.8L));
    CHECK(rel(cplx(double(t.real()), double(t.imag())), theta(cplx(0.2, 0.1), cplx(0.3, 0.8)).value) < 1e-14);
}

TEST_CASE("series domain errors") {
    CHECK(testing::kind_of([] { qpoch_inf(0.5, 1.0); }) == ErrorKind::BaseOutOfRange);
    CHECK(testing::kind_of([] { theta(0.0, cplx(0, -1)); }) == ErrorKind::NomeOutOfRange);
    CHECK(testing::kind_of([] { phi_series({0.3}, {0.5}, 0.4, 0.5); }) == ErrorKind::ParameterOutOfRange);
    CHECK(is_domain_error(testing::kind_of([] { phi_series({0.3, 0.2}, {0.5}, 0.4, 1.5); })));
    CHECK(testing::kind_of([] { bilateral_psi({0.5}, {0.9}, 0.3, 0.1); }) == ErrorKind::OutsideAnnulus);
}

TEST_CASE("qseries invariants") { testing::check_invariants("qseries"); }
