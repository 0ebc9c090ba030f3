#include "hypbeta/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hypbeta/errors.hpp"
#include "hypbeta/hypgamma.hpp"
#include "hypbeta/integrals.hpp"
#include "hypbeta/qseries.hpp"
#include "hypbeta/quadrature.hpp"
#include "hypbeta/report.hpp"
#include "hypbeta/sums.hpp"

namespace hypbeta {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
const double sqrt2 = std::numbers::sqrt2;
using Vals = std::vector<cplx>;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t s) : g(s) {}
    double u(double lo, double hi) { return lo + (hi - lo) * double(g() >> 11) * 0x1.0p-53; }
    cplx c(double rlo, double rhi, double ilo, double ihi) { return {u(rlo, rhi), u(ilo, ihi)}; }
};

double rel(cplx a, cplx b) {
    const double s = std::max(std::abs(b), 1e-300);
    return std::abs(a - b) / s;
}

class Suite {
public:
    Suite(const SelftestOptions& o, const std::function<void(const InvariantResult&)>& cb) : opt_(o), cb_(cb) {}

    bool wants(const std::string& module, const std::string& name) const {
        if (opt_.filter.empty() || opt_.filter == module) return true;
        const std::string full = module + "." + name;
        return full.compare(0, opt_.filter.size(), opt_.filter) == 0;
    }

    // body returns the max residual seen
    void check(const std::string& module, const std::string& name, double bound, const std::function<double()>& body) {
        if (!wants(module, name)) return;
        InvariantResult r{module, name, 0.0, bound, false, ""};
        try {
            r.residual = body();
            r.pass = r.residual <= bound;
        } catch (const std::exception& e) {
            r.residual = inf;
            r.note = e.what();
        }
        if (std::isnan(r.residual)) r.pass = false;
        results.push_back(r);
        if (cb_) cb_(r);
    }

    const SelftestOptions& opt() const { return opt_; }
    Rng rng(std::uint64_t salt) const { return Rng(opt_.seed * 0x9E3779B97F4A7C15ull + salt); }

    std::vector<InvariantResult> results;

private:
    SelftestOptions opt_;
    std::function<void(const InvariantResult&)> cb_;
};

// ---- qseries

void qseries_suite(Suite& S) {
    const int n = S.opt().grid;
    S.check("qseries", "shift_identity", 1e-12, [&] {
        Rng r = S.rng(1);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const double rq = r.u(0.0, 0.9), aq = r.u(0.0, 2.0);
            const cplx q = std::polar(rq, r.u(-pi, pi)), a = std::polar(aq, r.u(-pi, pi));
            const cplx lhs = qpoch_inf(a, q).value, rhs = (1.0 - a) * qpoch_inf(a * q, q).value;
            m = std::max(m, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
        }
        return m;
    });
    S.check("qseries", "quadratic_splitting", 1e-12, [&] {
        Rng r = S.rng(2);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const cplx q = std::polar(r.u(0.05, 0.8), r.u(-pi, pi)), u = std::polar(r.u(0.0, 1.3), r.u(-pi, pi));
            const cplx h = std::sqrt(q);
            const cplx lhs = qpoch_inf(u * u, q).value;
            const cplx rhs = qpoch_inf(u, q).value * qpoch_inf(-u, q).value * qpoch_inf(h * u, q).value *
                             qpoch_inf(-h * u, q).value;
            m = std::max(m, rel(rhs, lhs));
        }
        return m;
    });
    S.check("qseries", "theta_series_vs_triple_product", 1e-12, [&] {
        Rng r = S.rng(3);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const cplx tau = r.c(-0.5, 0.5, 0.2, 2.0);
            const cplx z = std::polar(r.u(0.0, 1.0), r.u(-pi, pi));
            const SeriesValue a = theta(z, tau, ThetaMethod::series), b = theta(z, tau, ThetaMethod::triple_product);
            m = std::max(m, rel(a.value, b.value));
        }
        return m;
    });
    S.check("qseries", "theta_quasi_periodicity", 1e-10, [&] {
        Rng r = S.rng(4);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const cplx tau = r.c(-0.5, 0.5, 0.4, 2.0), z = r.c(-0.5, 0.5, -0.3, 0.3);
            const TauParameter tp(tau);
            const cplx lhs = theta_inverse(z - 1.0 / tau, tp);
            const cplx rhs = tp.qt_pow(-0.5) * std::exp(-two_pi_i * z) * theta_inverse(z, tp);
            m = std::max(m, rel(lhs, rhs));
        }
        return m;
    });
    S.check("qseries", "q_binomial", 1e-10, [&] {
        Rng r = S.rng(5);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const cplx q = std::polar(r.u(0.05, 0.8), r.u(-pi, pi));
            const cplx a = std::polar(r.u(0.0, 1.5), r.u(-pi, pi)), z = std::polar(r.u(0.0, 0.8), r.u(-pi, pi));
            const cplx lhs = phi_series({a}, {}, q, z).value;
            const cplx rhs = qpoch_inf(a * z, q).value / qpoch_inf(z, q).value;
            m = std::max(m, rel(lhs, rhs));
        }
        return m;
    });
    S.check("qseries", "bilateral_reduces_to_unilateral", 1e-12, [&] {
        Rng r = S.rng(6);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            // annulus |q/a| < |z| < 1
            const cplx q = std::polar(r.u(0.05, 0.3), r.u(-pi, pi));
            const cplx a = std::polar(r.u(0.6, 0.9), r.u(-pi, pi)), z = std::polar(r.u(0.55, 0.85), r.u(-pi, pi));
            const cplx lhs = bilateral_psi({a}, {q}, q, z).value;
            const cplx rhs = phi_series({a}, {}, q, z).value;
            m = std::max(m, rel(lhs, rhs));
        }
        return m;
    });
    S.check("qseries", "eta_modularity", 1e-12, [&] {
        double m = 0.0;
        for (cplx s : {cplx(0, 2), cplx(0.3, 0.8), cplx(-0.4, 1.3)})
            m = std::max(m, rel(dedekind_eta(-1.0 / s), dedekind_eta(s) * std::sqrt(-I * s)));
        return m;
    });
}

// ---- hypgamma

HyperbolicPair random_pair(Rng& r) { return {r.c(0.5, 2.0, -0.3, 0.3), r.c(0.5, 2.0, -0.3, 0.3)}; }

cplx strip_point(Rng& r, const HyperbolicPair& p, double frac = 0.9) {
    const double s = frac * 0.5 * (p.a_plus.real() + p.a_minus.real());
    return r.c(-2.0, 2.0, -s, s);
}

cplx F(cplx z, const TauParameter& tp) { return tau_factorial(z, tp); }

const std::vector<cplx>& factorial_taus() {
    static const std::vector<cplx> t{cplx(0.0, 0.3), cplx(-1.0, 0.5), cplx(-sqrt2, 0.0), cplx(-0.7, 0.4),
                                     cplx(-2.0, 0.1)};
    return t;
}

void hypgamma_suite(Suite& S) {
    const int n = S.opt().grid;
    S.check("hypgamma", "reflection_gamma_h", 1e-11, [&] {
        Rng r = S.rng(11);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const HyperbolicPair p = random_pair(r);
            const cplx z = strip_point(r, p);
            m = std::max(m, std::abs(gamma_h(p, z) * gamma_h(p, -z) - 1.0));
        }
        return m;
    });
    S.check("hypgamma", "modular_symmetry", 1e-11, [&] {
        Rng r = S.rng(12);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const HyperbolicPair p = random_pair(r);
            const cplx z = strip_point(r, p);
            m = std::max(m, rel(gamma_h({p.a_minus, p.a_plus}, z), gamma_h(p, z)));
        }
        return m;
    });
    S.check("hypgamma", "scale_invariance", 1e-11, [&] {
        Rng r = S.rng(13);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const HyperbolicPair p = random_pair(r);
            const cplx z = strip_point(r, p);
            const cplx g = gamma_h(p, z);
            for (double s : {0.5, 2.0, 3.7}) m = std::max(m, rel(gamma_h({s * p.a_plus, s * p.a_minus}, s * z), g));
        }
        return m;
    });
    S.check("hypgamma", "difference_equations", 1e-10, [&] {
        Rng r = S.rng(14);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const HyperbolicPair p = random_pair(r);
            const cplx z = strip_point(r, p, 0.6);
            const cplx ap = p.a_plus, am = p.a_minus;
            const cplx l1 = gamma_h(p, z + I * ap / 2.0) / gamma_h(p, z - I * ap / 2.0);
            const cplx l2 = gamma_h(p, z + I * am / 2.0) / gamma_h(p, z - I * am / 2.0);
            m = std::max(m, rel(l1, 2.0 * std::cosh(pi * z / am)));
            m = std::max(m, rel(l2, 2.0 * std::cosh(pi * z / ap)));
        }
        return m;
    });
    S.check("hypgamma", "integral_vs_product", 1e-10, [&] {
        Rng r = S.rng(15);
        double m = 0.0;
        for (int k = 0; k < n; ++k) {
            const double am = r.u(0.5, 1.5);
            const HyperbolicPair p{am * r.c(0.3, 1.5, 0.1, 2.0), am};
            const cplx z = strip_point(r, p, 0.8);
            m = std::max(m, rel(gamma_h_product(p, z), gamma_h(p, z, 1e-14, GammaMethod::automatic)));
        }
        return m;
    });
    S.check("hypgamma", "factorial_functional_equations", 1e-10, [&] {
        Rng r = S.rng(16);
        double m = 0.0;
        for (cplx tau : factorial_taus()) {
            const TauParameter tp(tau);
            for (int k = 0; k < std::max(4, n / 4); ++k) {
                const cplx z = r.c(-1.0, 1.0, -0.5, 0.5);
                const cplx f = F(z, tp);
                m = std::max(m, rel(F(z + 1.0, tp), (1.0 - tp.q_pow(z)) * f));
                m = std::max(m, rel(F(z - 1.0 / tau, tp), (1.0 - tp.qt_pow(-1.0) * std::exp(-two_pi_i * z)) * f));
            }
        }
        return m;
    });
    S.check("hypgamma", "reflection_equation", 1e-10, [&] {
        Rng r = S.rng(17);
        double m = 0.0;
        for (cplx tau : {cplx(-sqrt2, 0.0), cplx(-0.7, 0.4), cplx(-2.0, 0.1)}) {
            const TauParameter tp(tau);
            const cplx c = 0.5 + 0.5 / tau;
            const cplx K = tp.modular_k() * (1.0 + S.opt().perturb);
            for (int k = 0; k < std::max(4, n / 3); ++k) {
                const cplx z = r.c(-1.0, 1.0, -0.5, 0.5);
                m = std::max(m, rel(F(c + z, tp) * F(c - z, tp), K * tp.q_pow(z * z / 2.0)));
            }
        }
        return m;
    });
    S.check("hypgamma", "doubling", 1e-9, [&] {
        Rng r = S.rng(18);
        double m = 0.0;
        for (cplx tau : factorial_taus()) {
            const TauParameter tp(tau);
            const cplx h = 0.5 / tau;
            for (int k = 0; k < std::max(4, n / 4); ++k) {
                const cplx x = r.c(-0.8, 0.8, -0.4, 0.4);
                cplx lhs = 1.0;
                for (cplx b : {cplx(0.5), cplx(1.0), 0.5 + h, 1.0 + h}) lhs *= F(b + x, tp) * F(b - x, tp);
                m = std::max(m, rel(lhs, F(1.0 + 2.0 * x, tp) * F(1.0 - 2.0 * x, tp)));
            }
        }
        return m;
    });
    S.check("hypgamma", "lemma_double_argument", 1e-9, [&] {
        Rng r = S.rng(19);
        double m = 0.0;
        for (cplx tau : factorial_taus()) {
            const TauParameter tp(tau);
            const cplx c = -I * std::exp(-2.0 * tp.log_modular_k());
            for (int k = 0; k < std::max(4, n / 4); ++k) {
                const cplx z = r.c(-0.8, 0.8, -0.4, 0.4);
                const cplx rhs = c * tp.q_pow(2.0 * z * z) * (tp.q_pow(-z) - tp.q_pow(z)) *
                                 (std::exp(two_pi_i * z) - std::exp(-two_pi_i * z));
                m = std::max(m, rel(F(1.0 + 2.0 * z, tp) * F(1.0 - 2.0 * z, tp), rhs));
            }
        }
        return m;
    });
    S.check("hypgamma", "asymptotic_sanity", 0.01, [&] {
        const TauParameter tp(cplx(-sqrt2, 0.0));
        double m = 0.0;
        for (int k = 0; k <= 10; ++k) m = std::max(m, std::abs(F(cplx(-1.0 + 0.2 * k, -20.0), tp) - 1.0));
        return m;
    });
}

// ---- quadrature

void quadrature_suite(Suite& S) {
    S.check("quadrature", "linearity", 1.0, [&] {
        // residual measured in units of the summed error estimates (with a rounding floor)
        Rng r = S.rng(21);
        double m = 0.0;
        for (int k = 0; k < std::max(5, S.opt().grid / 4); ++k) {
            const double w1 = r.u(1.0, 5.0), w2 = r.u(0.2, 3.0);
            const cplx al = r.c(-2, 2, -2, 2), be = r.c(-2, 2, -2, 2);
            auto f = [=](cplx x) { return std::exp(-w1 * x * x) * std::cos(3.0 * x); };
            auto g = [=](cplx x) { return 1.0 / (1.0 + w2 * x * x) * std::exp(I * x); };
            const QuadratureValue a = integrate_segment(f, -2.0, 3.0, 1e-12), b = integrate_segment(g, -2.0, 3.0, 1e-12);
            const QuadratureValue c =
                integrate_segment([&](cplx x) { return al * f(x) + be * g(x); }, -2.0, 3.0, 1e-12);
            const double budget = std::abs(al) * a.err_est + std::abs(be) * b.err_est + c.err_est +
                                  1e-14 * (std::abs(al * a.value) + std::abs(be * b.value));
            m = std::max(m, std::abs(c.value - al * a.value - be * b.value) / budget);
        }
        return m;
    });
    S.check("quadrature", "rotation_hyper_ramanujan", 1.0, [&] {
        double m = 0.0;
        for (cplx tau : {cplx(-1.2, 0.4), cplx(-0.8, 0.6)}) {
            const IdentityParams p{tau, {0.3, 0.25}};
            const IdentityReport a = evaluate_identity("hyper_ramanujan", p, 1e-8);
            const SideValue b = hyperbolic_real_line_lhs("hyper_ramanujan", p, 1e-10);
            m = std::max(m, std::abs(a.lhs - b.value) / (a.lhs_err_est + b.err_est + 1e-14 * std::abs(b.value)));
        }
        return m;
    });
    S.check("quadrature", "error_estimate_coverage", 0.05, [&] {
        struct Known {
            std::function<QuadratureValue()> run;
            cplx exact;
        };
        std::vector<Known> ks;
        auto seg = [&](std::function<cplx(cplx)> f, cplx a, cplx b, cplx ex, double tol) {
            ks.push_back({[=] { return integrate_segment(f, a, b, tol); }, ex});
        };
        seg([](cplx x) { return x; }, 0.0, 1.0, 0.5, 1e-10);
        seg([](cplx x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0) - 1.0, 1e-10);
        seg([](cplx x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, pi / 4.0, 1e-11);
        seg([](cplx x) { return std::sin(x); }, 0.0, pi, 2.0, 1e-10);
        seg([](cplx x) { return std::exp(two_pi_i * x); }, 0.0, 1.0, 0.0, 1e-10);
        seg([](cplx x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0, 1e-9);
        seg([](cplx x) { return std::log(x); }, 0.0, 1.0, -1.0, 1e-9);
        seg([](cplx x) { return 1.0 / (x + 0.01); }, 0.0, 1.0, std::log(101.0), 1e-10);
        seg([](cplx x) { return std::cos(40.0 * x); }, 0.0, 1.0, std::sin(40.0) / 40.0, 1e-10);
        seg([](cplx z) { return z * z; }, cplx(0, 0), cplx(1, 1), std::pow(cplx(1, 1), 3) / 3.0, 1e-12);
        seg([](cplx z) { return std::exp(z); }, cplx(0, 0), cplx(0, pi), -2.0, 1e-12);
        const TauParameter t4(cplx(0, 0.4));
        seg([t4](cplx x) { return theta_inverse(x, t4); }, 0.0, 1.0, 1.0, 1e-11);
        for (cplx tau : {cplx(0, 1), cplx(0.5, 0.5), cplx(-0.3, 0.8)}) {
            const TauParameter tp(tau);
            ks.push_back({[tp] {
                              return integrate_line([&](cplx x) { return std::exp(tp.log_q_pow(x * x / 2.0)); },
                                                    Contour::real_line(), 0.0, 1e-11);
                          },
                          1.0 / tp.sqrt_mit()});
        }
        ks.push_back({[] {
                          return integrate_line([](cplx x) { return 1.0 / std::cosh(pi * x); }, Contour::real_line(),
                                                pi, 1e-11);
                      },
                      1.0});
        ks.push_back({[] {
                          return integrate_line([](cplx z) { return std::exp(z * z); }, Contour::imaginary_line(),
                                                0.0, 1e-11);
                      },
                      I * std::sqrt(pi)});
        ks.push_back({[] { return integrate_circle([](cplx) { return cplx(1.0); }, 1e-12); }, 1.0});
        ks.push_back({[] { return integrate_circle([](cplx z) { return z; }, 1e-12); }, 0.0});
        ks.push_back({[] { return integrate_circle([](cplx z) { return 1.0 / (1.0 - 0.5 / z); }, 1e-12); }, 1.0});
        ks.push_back({[] { return integrate_circle([](cplx z) { return std::exp(z + 1.0 / z); }, 1e-12); },
                      std::cyl_bessel_i(0.0, 2.0)});
        int bad = 0;
        for (const Known& k : ks) {
            const QuadratureValue v = k.run();
            const double err = std::abs(v.value - k.exact);
            if (err > v.err_est + 4e-16 * std::max(1.0, std::abs(k.exact))) ++bad;
        }
        return double(bad) / double(ks.size());
    });
}

// ---- sums

std::array<cplx, 5> weak_point(int k) {
    switch (k) {
        case 0: return {cplx(0.8, -0.1), cplx(0.8, -0.1), cplx(0.8, -0.1), cplx(0.8, -0.1), cplx(0.8, -0.1)};
        case 1: return {cplx(0.7, -0.1), cplx(0.8, -0.05), cplx(0.75, -0.15), cplx(0.85, -0.1), cplx(0.9, -0.12)};
        default: return {cplx(0.6, 0.05), cplx(0.9, -0.2), cplx(0.8, 0.1), cplx(0.7, 0.0), cplx(0.95, -0.1)};
    }
}

void sums_suite(Suite& S) {
    const TauParameter t1(cplx(0, 1)), t3(cplx(0, 0.3)), t4(cplx(0, 0.4)), tm(cplx(0.5, 0.5));
    S.check("sums", "jacobi_inversion", 1e-8, [&] {
        return std::max({jacobi_inversion_residual(0.0, t1), jacobi_inversion_residual(0.3, t4),
                         jacobi_inversion_residual(cplx(0.3, 0.2), tm), jacobi_inversion_residual(0.71, t3)});
    });
    S.check("sums", "ramanujan_1psi1", 1e-8, [&] {
        return std::max({ramanujan_1psi1_residual(0.2, 0.5, 0.5, t1), ramanujan_1psi1_residual(0.0, 0.9, 0.9, t3),
                         ramanujan_1psi1_residual(cplx(0.1, 0.05), cplx(0.3, 0.2), cplx(-0.4, 0.1), t4)});
    });
    S.check("sums", "bailey_6psi6", 1e-8, [&] {
        return std::max({bailey_6psi6_residual(0.1, {0.24, 0.24, 0.24, 0.24}, t3),
                         bailey_6psi6_residual(0.37, {0.1, 0.1, 0.1, 0.1}, t3),
                         bailey_6psi6_residual(cplx(0.2, 0.05), {cplx(0.1, 0.05), 0.2, -0.15, cplx(0, 0.12)}, t4)});
    });
    S.check("sums", "weak_8psi8_consistency", 1e-8, [&] {
        double m = 0.0;
        for (int k = 0; k < 3; ++k) {
            const Weak8Psi8Data d = make_weak8psi8(weak_point(k), t3);
            for (cplx z : {cplx(0.11), cplx(0.37, 0.05), cplx(-0.23)}) {
                const cplx phi = weak_8psi8_phi(d, z);
                const SeriesValue b = weak_8psi8_bilateral(d, z);
                m = std::max(m, rel(b.value, phi * theta_inverse(z, t3)));
                m = std::max(m, rel(weak_8psi8_phi_nr(d, z), phi));
            }
        }
        return m;
    });
    S.check("sums", "key_lemma", 1e-8, [&] {
        double m = 0.0;
        for (int k = 0; k < 3; ++k) m = std::max(m, key_lemma_residual(make_weak8psi8(weak_point(k), t3)));
        m = std::max(m, key_lemma_residual(make_weak8psi8(weak_point(1), t4)));
        return m;
    });
    S.check("sums", "one_periodicity_1psi1", 1e-12, [&] {
        double m = 0.0;
        for (cplx z : {cplx(0.1), cplx(0.33, 0.1), cplx(-0.4, -0.05)}) {
            auto f = [&](cplx w) { return log_phitilde_1psi1(w, 0.5, cplx(0.3, 0.1), t3); };
            m = std::max(m, rel(fold_sum(f, z + 1.0, 1e-15).value, fold_sum(f, z, 1e-15).value));
        }
        return m;
    });
    S.check("sums", "bailey_degenerates_to_inversion", 1e-7, [&] {
        // 6psi6 residual at (q, -q, q^{1/2}, s); the Jacobi-inversion gap must shrink with s
        const cplx q = t3.q(), h = t3.q_pow(0.5);
        double m = 0.0;
        for (cplx z : {cplx(0.1), cplx(0.3, 0.05), cplx(-0.2)}) {
            m = std::max(m, bailey_6psi6_residual(z, {q, -q, h, 1e-6}, t3));
            auto gap = [&](double s) {
                const std::array<cplx, 4> sv{q, -q, h, s};
                const cplx fold = fold_sum([&](cplx w) { return log_phitilde_6psi6(w, sv, t3); }, z, 1e-15).value;
                return rel(fold * t3.sqrt_mit(), theta_inverse(z, t3));
            };
            const double g6 = gap(1e-6), g8 = gap(1e-8);
            if (!(g8 < g6 / 50.0)) m = std::max(m, g6);
        }
        return m;
    });
    S.check("sums", "quasi_periodicity_bilateral", 1e-10, [&] {
        const cplx it = 1.0 / t3.tau();
        const Weak8Psi8Data d = make_weak8psi8(weak_point(1), t3);
        std::vector<std::function<LogValue(cplx)>> fams{
            [&](cplx w) { return log_phitilde_1psi1(w, 0.5, cplx(0.3, 0.1), t3); },
            [&](cplx w) { return log_phitilde_6psi6(w, {0.24, 0.2, 0.1, cplx(0, 0.15)}, t3); },
            [&](cplx w) { return log_phitilde_8psi8(w, d.t, t3); }};
        double m = 0.0;
        for (const auto& f : fams)
            for (cplx z : {cplx(0.13), cplx(0.31, 0.04)}) {
                const cplx lhs = fold_sum(f, z - it, 1e-15).value;
                const cplx rhs = t3.qt_pow(-0.5) * std::exp(-two_pi_i * z) * fold_sum(f, z, 1e-15).value;
                m = std::max(m, rel(lhs, rhs));
            }
        return m;
    });
    S.check("sums", "askey_wilson_orthogonality", 1e-6, [&] {
        const TauParameter ti(cplx(0, 1));
        const std::array<cplx, 4> tj{cplx(0.9, -0.1), cplx(0.9, -0.1), cplx(0.9, -0.1), cplx(0.9, -0.1)};
        std::array<std::array<cplx, 3>, 3> g{};
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) g[i][j] = aw_orthogonality(i, j, tj, ti, 1e-12).value;
        double m = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                m = std::max(m, std::abs(g[i][j]) / std::sqrt(std::abs(g[i][i]) * std::abs(g[j][j])));
        IdentityParams fp{ti.tau(), {}};
        for (cplx t : tj) fp.values.push_back(ti.q_pow(t));
        for (cplx t : tj) fp.values.push_back(std::exp(-two_pi_i * t));
        m = std::max(m, rel(g[0][0], find_identity("fused_askey_wilson").rhs(fp, 1e-12)));
        return m;
    });
    S.check("sums", "phi_8psi8_even", 1e-10, [&] {
        const Weak8Psi8Data d = make_weak8psi8(weak_point(1), t3);
        double m = 0.0;
        for (cplx z : {cplx(0.13), cplx(0.31, 0.04), cplx(-0.45, 0.1)})
            m = std::max(m, rel(weak_8psi8_phi(d, -z), weak_8psi8_phi(d, z)));
        return m;
    });
}

// ---- integrals

void integrals_suite(Suite& S) {
    S.check("integrals", "fusion_fold_ramanujan", 1e-8, [&] {
        double m = 0.0;
        for (const Vals& v : std::vector<std::vector<cplx>>{
                 {0.5, 0.3, 0.5, cplx(0, 0.2)}, {cplx(0.2, 0.3), -0.4, 1.5, cplx(0.5, -0.7)}, {0.7, 0.6, -2.0, 0.3}}) {
            const FoldCheck f = fusion_fold_check("fused_ramanujan", {cplx(0, 1), v}, 1e-11);
            m = std::max(m, rel(f.folded, f.line));
        }
        return m;
    });
    S.check("integrals", "fusion_fold_askey_wilson", 1e-8, [&] {
        double m = 0.0;
        for (const Vals& v : std::vector<std::vector<cplx>>{
                 {0.12, 0.1, 0.15, -0.1, 0.3, 0.2, -0.25, cplx(0, 0.4)},
                 {0.1, cplx(0, 0.1), -0.12, 0.08, 0.5, -0.3, cplx(0.2, 0.2), 0.1},
                 {0.14, 0.14, 0.14, 0.14, 0.6, 0.5, 0.4, 0.3}}) {
            const FoldCheck f = fusion_fold_check("fused_askey_wilson", {cplx(0, 0.4), v}, 1e-11);
            m = std::max(m, rel(f.folded, f.line));
        }
        return m;
    });
    S.check("integrals", "askey_wilson_as_nassrallah_rahman", 1e-7, [&] {
        const IdentityDescriptor& aw = find_identity("trig_askey_wilson");
        IdentityParams nr = aw.defaults;
        nr.values.insert(nr.values.begin(), 1e-12);
        const cplx a = aw.lhs(aw.defaults, 1e-12).value;
        const cplx b = find_identity("trig_nassrallah_rahman").lhs(nr, 1e-12).value;
        return rel(b, a);
    });
    S.check("integrals", "elliptic_to_trigonometric", 1e-7, [&] {
        const cplx p2 = 0.2;
        const IdentityDescriptor& ell = find_identity("elliptic_nassrallah_rahman");
        IdentityParams pe = ell.defaults;
        pe.values[5] = 1e-12;
        pe.values[6] = p2;
        IdentityParams pt{std::log(p2) / two_pi_i, {pe.values.begin(), pe.values.begin() + 5}};
        const cplx a = ell.lhs(pe, 1e-12).value;
        const cplx b = find_identity("trig_nassrallah_rahman").lhs(pt, 1e-12).value;
        return rel(a, b);
    });
    S.check("integrals", "hyperbolic_evenness", 1e-12, [&] {
        const TauParameter tp(cplx(-sqrt2, 0.0));
        const std::vector<cplx> aw(4, 0.8), nr{0.8, 0.75, cplx(0.85, 0.1), 0.7, cplx(0.9, -0.1)};
        double m = 0.0;
        for (cplx z : {cplx(0, 0.3), cplx(0.1, 1.2), cplx(-0.05, -2.5)}) {
            m = std::max(m, rel(hyper_aw_integrand(-z, aw, tp), hyper_aw_integrand(z, aw, tp)));
            m = std::max(m, rel(hyper_nr_integrand(-z, nr, tp), hyper_nr_integrand(z, nr, tp)));
        }
        return m;
    });
    S.check("integrals", "hyperbolic_rotation", 1.0, [&] {
        struct C {
            const char* id;
            IdentityParams p;
        };
        const std::vector<C> cs{{"hyper_ramanujan", {cplx(-1.2, 0.4), {0.3, 0.3}}},
                                {"hyper_askey_wilson", {cplx(-1, 1), std::vector<cplx>(4, cplx(0.8, -0.05))}},
                                {"hyper_nassrallah_rahman", {cplx(-0.5, 0.2), std::vector<cplx>(5, cplx(0.82, -0.04))}}};
        double m = 0.0;
        for (const C& c : cs) {
            const IdentityReport a = evaluate_identity(c.id, c.p, 1e-8);
            const SideValue b = hyperbolic_real_line_lhs(c.id, c.p, 1e-10);
            m = std::max(m, std::abs(a.lhs - b.value) / (a.lhs_err_est + b.err_est + 1e-14 * std::abs(b.value)));
        }
        return m;
    });
    S.check("integrals", "unimodular_regime", 1e-6, [&] {
        double m = 0.0;
        for (cplx tau : {cplx(-sqrt2, 0.0), cplx(-1.5707963, 0.0)}) {
            m = std::max(m, evaluate_identity("hyper_ramanujan", {tau, {0.3, 0.3}}).rel_err);
            m = std::max(m, evaluate_identity("hyper_askey_wilson", {tau, std::vector<cplx>(4, 0.8)}).rel_err);
            m = std::max(m, evaluate_identity("hyper_nassrallah_rahman", {tau, std::vector<cplx>(5, 0.8)}).rel_err);
        }
        return m;
    });
    S.check("integrals", "default_points", 1.0, [&] {
        // worst rel_err / tol over the registry defaults, skipping the slow shifted-line case
        double m = 0.0;
        for (const IdentityDescriptor& d : registry()) {
            if (d.id == "etingof_type_limit") continue;
            const IdentityReport r = evaluate_identity(d.id, d.defaults);
            m = std::max(m, r.rel_err / r.tol);
        }
        return m;
    });
}

// ---- cli

void cli_suite(Suite& S) {
    S.check("cli", "report_schema", 0.0, [&] {
        const IdentityReport r = evaluate_identity("gauss", {cplx(0, 1), {}}, 1e-10);
        const auto row = report_row(r);
        double missing = 0.0;
        for (const char* k : {"id", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "tol", "pass",
                              "evals", "wall_ms"})
            if (!row.contains(k)) missing += 1.0;
        return missing;
    });
    S.check("cli", "complex_round_trip", 0.0, [&] {
        double m = 0.0;
        for (cplx z : {cplx(0.8, 0.0), cplx(-1.4142135623730951, 0.0), cplx(0.1, -0.2), cplx(1e-300, 3e10)})
            m = std::max(m, std::abs(parse_complex(format_complex(z)) - z));
        return m;
    });
}

}  // namespace

std::vector<std::string> invariant_modules() { return {"qseries", "hypgamma", "quadrature", "sums", "integrals", "cli"}; }

std::vector<InvariantResult> run_invariants(const SelftestOptions& opt,
                                            const std::function<void(const InvariantResult&)>& on_result) {
    Suite S(opt, on_result);
    qseries_suite(S);
    hypgamma_suite(S);
    quadrature_suite(S);
    sums_suite(S);
    integrals_suite(S);
    cli_suite(S);
    return S.results;
}

}  // namespace hypbeta
