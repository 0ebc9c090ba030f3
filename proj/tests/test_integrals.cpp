#include <numbers>
#include <set>

#include "doctest.h"
#include "hypbeta/integrals.hpp"
#include "support.hpp"

using namespace hypbeta;
using testing::rel;

TEST_CASE("registry ids are unique and resolvable") {
    const auto ids = identity_ids();
    CHECK(ids.size() == 19);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    for (const auto& id : ids) {
        const IdentityDescriptor& d = find_identity(id);
        CHECK(d.param_names.size() == d.defaults.values.size());
        CHECK_FALSE(first_violation(id, d.defaults));
    }
    CHECK(testing::kind_of([] { find_identity("no_such_identity"); }) == ErrorKind::UnknownIdentity);
}

TEST_CASE("every identity passes at its default point") {
    for (const auto& d : registry()) {
        if (d.id == "etingof_type_limit") continue;  // slow; covered by the acceptance run
        const IdentityReport r = evaluate_identity(d.id, d.defaults);
        INFO(d.id << " rel_err " << r.rel_err << " tol " << r.tol);
        CHECK(r.pass);
        CHECK(r.tol == d.default_tol);
        CHECK(r.evals > 0);
    }
}

TEST_CASE("default tolerances follow the identity class") {
    CHECK(find_identity("trig_askey_wilson").default_tol == 1e-8);
    CHECK(find_identity("elliptic_nassrallah_rahman").default_tol == 1e-8);
    CHECK(find_identity("hyper_askey_wilson").default_tol == 1e-6);
    CHECK(find_identity("euler_beta_warmup").default_tol == 1e-9);
}

TEST_CASE("trigonometric Askey-Wilson integral against direct quadrature") {
    const IdentityDescriptor& d = find_identity("trig_askey_wilson");
    const SideValue v = d.lhs(d.defaults, 1e-12);
    CHECK(rel(v.value, cplx(2.2058549267793731, 0.27620131906829139)) < 1e-12);
}

TEST_CASE("Euler beta warmup") {
    const IdentityReport r = evaluate_identity("euler_beta_warmup", {cplx(0, 1), {2.5, 1.5}});
    CHECK(rel(r.rhs, 0.19634954084936208) < 1e-13);
    CHECK(rel(r.lhs, 0.19634954084936208) < 1e-9);
}

TEST_CASE("log_gamma against reference values") {
    CHECK(std::abs(log_gamma(cplx(3.3, -2.1)) - cplx(0.26578018515291106, -2.3396951071780494)) < 1e-13);
    // compare through exp: the branch of the imaginary part is not fixed
    CHECK(rel(std::exp(log_gamma(cplx(-2.6, 0.4))), std::exp(cplx(-0.77063281128279627, -9.2389403280464314))) <
          1e-13);
}

TEST_CASE("Gaussian calibration") {
    const IdentityReport r = evaluate_identity("gauss", {cplx(0, 1), {}});
    CHECK(std::abs(r.lhs - 1.0) < 1e-10);
    CHECK(r.pass);
}

TEST_CASE("domain violations name the constraint") {
    const IdentityParams p{cplx(-1.41421356, 0.0), {0.5, 0.5, 0.5, 0.5}};
    const auto v = first_violation("hyper_askey_wilson", p);
    REQUIRE(v);
    CHECK(v->name == "Re((a−3)τ)<1");
    CHECK(v->value == doctest::Approx(1.41421356).epsilon(1e-6));
    try {
        evaluate_identity("hyper_askey_wilson", p);
        FAIL("no exception");
    } catch (const DomainViolation& e) {
        CHECK(e.constraint() == "Re((a−3)τ)<1");
    }
    CHECK(testing::kind_of([] { evaluate_identity("hyper_ramanujan", {cplx(-1.4, 0), {0.3}}); }) ==
          ErrorKind::ParameterOutOfRange);
}

TEST_CASE("parameter draws are seeded and stay in the domain") {
    for (const char* id : {"trig_askey_wilson", "hyper_ramanujan", "fused_askey_wilson"}) {
        const IdentityDescriptor& d = find_identity(id);
        long rej = 0;
        const auto a = draw_params(d, 12, 7, std::nullopt, &rej);
        const auto b = draw_params(d, 12, 7);
        REQUIRE(a.size() == 12);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].tau == b[i].tau);
            CHECK(a[i].values == b[i].values);
            CHECK_FALSE(first_violation(id, a[i]));
        }
        CHECK(draw_params(d, 3, 8)[0].values != a[0].values);
    }
    const auto fixed = draw_params(find_identity("hyper_ramanujan"), 4, 1, cplx(-1.41421356, 0));
    for (const auto& p : fixed) CHECK(p.tau == cplx(-1.41421356, 0));
}

TEST_CASE("residue calibration of the Ramanujan integral") {
    const TauParameter tp(cplx(0, 0.3));
    const IdentityReport r = residue_ramanujan(2.0, 0.5, tp, 1e-9);
    CHECK(r.pass);
    CHECK(r.rel_err < 1e-12);
    CHECK(testing::kind_of([&] { residue_ramanujan(0.5, 0.5, tp); }) == ErrorKind::DomainViolation);
}

TEST_CASE("Nassrallah-Rahman to Askey-Wilson limit trend") {
    const IdentityDescriptor& d = find_identity("nr_to_aw_limit");
    const LimitStudy s = limit_study(d.id, d.defaults, {-2.0, -4.0, -8.0});
    REQUIRE(s.points.size() == 3);
    CHECK(s.monotone);
    CHECK(s.points.back().deviation < 1e-10);
}

TEST_CASE("fold checks reproduce the real-line integrals") {
    const FoldCheck f = fusion_fold_check("fused_ramanujan", find_identity("fused_ramanujan").defaults, 1e-11);
    CHECK(rel(f.folded, f.line) < 1e-9);
}

TEST_CASE("hyperbolic integrands are even") {
    const TauParameter tp(cplx(-std::numbers::sqrt2, 0.0));
    const cplx z(0.2, 1.1);
    const std::vector<cplx> tj(4, 0.8);
    CHECK(rel(hyper_aw_integrand(-z, tj, tp), hyper_aw_integrand(z, tj, tp)) < 1e-12);
}

TEST_CASE("integrals invariants") { testing::check_invariants("integrals"); }
