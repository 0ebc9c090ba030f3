// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "hypbeta/cli.hpp"
#include "hypbeta/errors.hpp"
#include "hypbeta/hypgamma.hpp"
#include "hypbeta/integrals.hpp"
#include "hypbeta/selftest.hpp"
#include "hypbeta/sums.hpp"

using namespace hypbeta;

namespace {

int failures = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

void criterion(int n, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0.0 && s > budget_s) {
        o.pass = false;
        o.detail += fmt("; over the %.0f s budget", budget_s);
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s  %s: %s (%.1f s)\n", n, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), s);
    std::fflush(stdout);
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<InvariantResult> invariants(const std::vector<std::string>& names, int grid) {
    std::vector<InvariantResult> out;
    for (const std::string& n : names) {
        SelftestOptions o;
        o.filter = n;
        o.grid = grid;
        for (const InvariantResult& r : run_invariants(o))
            if (r.module + "." + r.name == n) out.push_back(r);
    }
    return out;
}

Outcome max_residual(const std::vector<std::string>& names, int grid, double bound) {
    const auto rs = invariants(names, grid);
    double m = 0.0;
    std::string worst, missing;
    for (const InvariantResult& r : rs)
        if (!(r.residual <= m)) {
            m = r.residual;
            worst = r.module + "." + r.name;
        }
    bool pass = rs.size() == names.size() && m <= bound;
    std::string d = fmt("max residual %.2e (bound %.0e)", m, bound) + ", worst " + worst;
    if (rs.size() != names.size()) d += "; some invariants missing";
    return {pass, d};
}

}  // namespace

int main() {
    const double sqrt2 = std::numbers::sqrt2;

    criterion(1, "hyperbolic gamma: integral vs product", 30.0, [] {
        std::mt19937_64 g(1);
        auto u = [&](double lo, double hi) { return lo + (hi - lo) * double(g() >> 11) * 0x1.0p-53; };
        double m = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double am = u(0.5, 1.5);
            const HyperbolicPair p{am * cplx(u(0.3, 1.5), u(0.1, 2.0)), am};
            const double s = 0.45 * (p.a_plus.real() + p.a_minus.real());
            const cplx z(u(-2.0, 2.0), u(-s, s));
            m = std::max(m, rel(gamma_h(p, z), gamma_h_product(p, z)));
        }
        return Outcome{m <= 1e-10, fmt("max rel_err %.2e over 100 points", m)};
    });

    criterion(2, "functional and reflection equations", 60.0, [] {
        return max_residual({"hypgamma.difference_equations", "hypgamma.modular_symmetry",
                             "hypgamma.scale_invariance", "hypgamma.reflection_gamma_h",
                             "hypgamma.factorial_functional_equations", "hypgamma.reflection_equation",
                             "hypgamma.doubling", "hypgamma.lemma_double_argument"},
                            100, 1e-9);
    });

    criterion(3, "bilateral summations", 120.0, [] {
        return max_residual({"sums.jacobi_inversion", "sums.ramanujan_1psi1", "sums.bailey_6psi6",
                             "sums.weak_8psi8_consistency", "sums.key_lemma"},
                            20, 1e-8);
    });

    criterion(4, "trigonometric and elliptic integrals", 300.0, [] {
        const std::vector<std::string> ids{"trig_ramanujan",  "trig_askey_wilson",     "trig_nassrallah_rahman",
                                           "elliptic_nassrallah_rahman", "gauss", "fused_ramanujan",
                                           "ram_lost_1",      "ram_lost_2",            "fused_askey_wilson",
                                           "mm_cherednik",    "fused_nassrallah_rahman", "mm_nassrallah_rahman"};
        double m = 0.0;
        std::string worst;
        long cases = 0;
        for (const std::string& id : ids) {
            const IdentityDescriptor& d = find_identity(id);
            std::vector<IdentityParams> pts{d.defaults};
            for (IdentityParams& p : draw_params(d, 2, 11)) pts.push_back(p);
            for (const IdentityParams& p : pts) {
                const IdentityReport r = evaluate_identity(id, p, 1e-8);
                ++cases;
                if (!(r.rel_err <= m)) {
                    m = r.rel_err;
                    worst = id;
                }
            }
        }
        return Outcome{m <= 1e-8, fmt("max rel_err %.2e over %.0f cases", m, double(cases)) + ", worst " + worst};
    });

    criterion(5, "hyperbolic integrals at |q| = 1 and contour rotation", 300.0, [&] {
        const cplx t(-sqrt2, 0.0);
        const double a = evaluate_identity("hyper_ramanujan", {t, {0.3, 0.3}}, 1e-6).rel_err;
        const double b = evaluate_identity("hyper_askey_wilson", {t, std::vector<cplx>(4, 0.8)}, 1e-6).rel_err;
        const double c = evaluate_identity("hyper_nassrallah_rahman", {t, std::vector<cplx>(5, 0.8)}, 1e-6).rel_err;
        const double m = std::max({a, b, c});
        const auto rot = invariants({"integrals.hyperbolic_rotation"}, 20);
        const bool rot_ok = rot.size() == 1 && rot[0].pass;
        const double rr = rot.empty() ? -1.0 : rot[0].residual;
        return Outcome{m <= 1e-6 && rot_ok,
                       fmt("max rel_err %.2e at tau = -sqrt2; rotation gap / combined err_est %.2f", m, rr)};
    });

    criterion(6, "coherence limits", 0.0, [] {
        return max_residual({"integrals.askey_wilson_as_nassrallah_rahman", "integrals.elliptic_to_trigonometric",
                             "sums.bailey_degenerates_to_inversion"},
                            20, 1e-7);
    });

    criterion(7, "limit trends", 0.0, [] {
        std::ostringstream d;
        bool pass = true;
        auto show = [&](const LimitStudy& s) {
            d << s.id << " [";
            for (std::size_t i = 0; i < s.points.size(); ++i) d << (i ? " " : "") << fmt("%.2e", s.points[i].deviation);
            d << "]" << (s.monotone ? "" : " not decreasing") << "; ";
        };
        const IdentityDescriptor& deg = find_identity("degeneration_ell_to_hyp");
        const LimitStudy s1 = limit_study(deg.id, deg.defaults, {0.2, 0.1, 0.05});
        show(s1);
        d << "c_r [";
        for (std::size_t i = 0; i < s1.points.size(); ++i) d << (i ? " " : "") << fmt("%.2e", s1.points[i].aux_deviation);
        d << "]; ";
        pass = pass && s1.monotone && s1.aux_monotone && s1.points.back().deviation <= 1e-2;
        const IdentityDescriptor& nr = find_identity("nr_to_aw_limit");
        const LimitStudy s2 = limit_study(nr.id, nr.defaults, {-2.0, -4.0, -8.0});
        show(s2);
        pass = pass && s2.monotone;
        const IdentityDescriptor& et = find_identity("etingof_type_limit");
        const LimitStudy s3 = limit_study(et.id, et.defaults, {0.05, 0.025, 0.0125});
        show(s3);
        pass = pass && s3.monotone;
        return Outcome{pass, d.str()};
    });

    criterion(8, "Askey-Wilson orthogonality", 0.0, [] {
        const TauParameter ti(cplx(0, 1));
        const std::array<cplx, 4> tj{cplx(0.9, -0.1), cplx(0.9, -0.1), cplx(0.9, -0.1), cplx(0.9, -0.1)};
        PairingValue g[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) g[i][j] = aw_orthogonality(i, j, tj, ti, 1e-12);
        double off = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                off = std::max(off, std::abs(g[i][j].value) /
                                        std::sqrt(std::abs(g[i][i].value) * std::abs(g[j][j].value)));
        IdentityParams fp{ti.tau(), {}};
        for (cplx t : tj) fp.values.push_back(ti.q_pow(t));
        for (cplx t : tj) fp.values.push_back(std::exp(-two_pi_i * t));
        const double norm = rel(g[0][0].value, find_identity("fused_askey_wilson").rhs(fp, 1e-12));
        return Outcome{off <= 1e-6 && norm <= 1e-7,
                       fmt("max normalized off-diagonal %.2e; <p0,p0> vs closed form %.2e", off, norm)};
    });

    criterion(9, "engine calibration", 0.0, [] {
        const IdentityReport e = evaluate_identity("euler_beta_warmup", find_identity("euler_beta_warmup").defaults, 1e-9);
        const IdentityReport r = residue_ramanujan(2.0, 0.5, TauParameter(cplx(0, 0.3)), 1e-9);
        return Outcome{e.pass && r.pass, fmt("euler beta rel_err %.2e; residue three-way %.2e", e.rel_err, r.rel_err)};
    });

    criterion(10, "sweep reproducibility", 0.0, [] {
        auto run = [](const std::vector<std::string>& a, int& code) {
            std::ostringstream out, err;
            code = run_cli(a, out, err);
            return out.str();
        };
        bool same = true;
        int bad = 0;
        for (const std::vector<std::string>& base :
             {std::vector<std::string>{"sweep", "--identity", "trig_askey_wilson", "--count", "50", "--seed", "7"},
              std::vector<std::string>{"sweep", "--identity", "hyper_ramanujan", "--count", "20", "--seed", "1",
                                       "--tau=-1.41421356"}}) {
            std::vector<std::string> j1{"--jobs", "1"}, j4{"--jobs", "4"};
            j1.insert(j1.end(), base.begin(), base.end());
            j4.insert(j4.end(), base.begin(), base.end());
            int c1 = 0, c2 = 0, c3 = 0;
            const std::string a = run(j1, c1), b = run(j4, c2), c = run(j4, c3);
            same = same && a == b && b == c && !a.empty();
            bad += (c1 != 0) + (c2 != 0) + (c3 != 0);
        }
        return Outcome{same && bad == 0, same ? std::string("byte-identical across runs and --jobs 1/4")
                                              : std::string("reports differ")};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
