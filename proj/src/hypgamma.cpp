#include "hypbeta/hypgamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "hypbeta/errors.hpp"
#include "hypbeta/qseries.hpp"
#include "hypbeta/quadrature.hpp"

namespace hypbeta {

void require_pair(const HyperbolicPair& p) {
    if (!(p.a_plus.real() > 0.0 && p.a_minus.real() > 0.0))
        raise(ErrorKind::ParameterOutOfRange, "Re(a+) > 0 and Re(a-) > 0 required");
}

PoleZeroList gamma_h_pole_zero(const HyperbolicPair& p) {
    const cplx b = 0.5 * I * (p.a_plus + p.a_minus);
    return {{b, I * p.a_plus, I * p.a_minus, 1, 1}, {-b, -I * p.a_plus, -I * p.a_minus, 1, 1}};
}

PoleZeroList tau_factorial_pole_zero(const TauParameter& tp) {
    const cplx it = 1.0 / tp.tau();
    return {{1.0, -it, 1.0, 1, 1}, {it, it, -1.0, 1, 1}};
}

double lattice_distance(const LatticeSet& s, cplx z, int window) {
    double best = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= window; ++m)
        for (int n = 0; n <= window; ++n)
            best = std::min(best, std::abs(z - (s.base + double(s.sign1 * m) * s.g1 + double(s.sign2 * n) * s.g2)));
    return best;
}

namespace {

constexpr int small_y_terms = 40;

// Coefficients of sin(2yz)/(2yz) / (P(a+ y) P(a- y)) in powers of y^2, P(w) = sinh(w)/w.
std::array<cplx, small_y_terms> small_y_series(cplx ap, cplx am, cplx z) {
    std::array<cplx, small_y_terms> s{}, pp{}, pm{}, d{}, r{};
    double fact = 1.0;  // (2k+1)!
    cplx z2 = 4.0 * z * z, ap2 = ap * ap, am2 = am * am;
    cplx zk = 1.0, apk = 1.0, amk = 1.0;
    for (int k = 0; k < small_y_terms; ++k) {
        if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
        s[k] = (k % 2 == 0 ? 1.0 : -1.0) * zk / fact;
        pp[k] = apk / fact;
        pm[k] = amk / fact;
        zk *= z2;
        apk *= ap2;
        amk *= am2;
    }
    for (int k = 0; k < small_y_terms; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += pp[j] * pm[k - j];
        d[k] = acc;
    }
    for (int k = 0; k < small_y_terms; ++k) {
        cplx acc = s[k];
        for (int j = 1; j <= k; ++j) acc -= d[j] * r[k - j];
        r[k] = acc / d[0];
    }
    return r;
}

cplx log_2cosh(cplx u) {
    if (u.real() > 20.0) return u + log1p(std::exp(-2.0 * u));
    if (u.real() < -20.0) return -u + log1p(std::exp(2.0 * u));
    return std::log(2.0 * std::cosh(u));
}

// log(2 cosh(pi u / a)) with zero detection at distance 1e-8 in the z variable.
LogValue cosh_factor(cplx u, cplx a) {
    const cplx v = pi * u / a;
    if (std::abs(v.real()) < 1.0) {
        const cplx c = 2.0 * std::cosh(v);
        if (std::abs(c) < 2.0 * pi * 1e-8 / std::abs(a)) return {{0.0, 0.0}, 1};
        return {std::log(c), 0};
    }
    return {log_2cosh(v), 0};
}

// e^{n c} / sin(n x) without overflow; nullopt on a small divisor.
std::optional<cplx> exp_over_sin(int n, cplx c, cplx x) {
    const double nd = n;
    const double ix = nd * x.imag();
    if (ix > 20.0) return -2.0 * I * std::exp(nd * (c + I * x)) / (1.0 - std::exp(2.0 * I * nd * x));
    if (ix < -20.0) return 2.0 * I * std::exp(nd * (c - I * x)) / (1.0 - std::exp(-2.0 * I * nd * x));
    const cplx s = std::sin(nd * x);
    if (std::abs(s) < 1e-6) return std::nullopt;
    return std::exp(nd * c) / s;
}

double series_ratio(cplx w, cplx a, cplx alpha_like) {
    return std::exp(-2.0 * pi * (w / a).real() - pi * std::abs(alpha_like.imag()));
}

// Large-|Re w| expansion of g obtained from the product representation,
// valid for Re(w/a+), Re(w/a-) > 0 (also for real a+/a-).
std::optional<cplx> g_series_pos(const HyperbolicPair& p, cplx w) {
    const cplx ap = p.a_plus, am = p.a_minus;
    const cplx alpha = ap / am;
    const double rm = series_ratio(w, am, alpha), rp = series_ratio(w, ap, 1.0 / alpha);
    const double rho = std::max(rm, rp);
    if (!(rho <= 0.2)) return std::nullopt;
    cplx sum = -pi * w * w / (2.0 * ap * am) - pi * (alpha + 1.0 / alpha) / 24.0;
    const int nmax = std::min(200, static_cast<int>(std::ceil(std::log(1e-18) / std::log(std::max(rho, 1e-300)))) + 3);
    const cplx cm = -2.0 * pi * w / am, cp = -2.0 * pi * w / ap;
    const cplx xm = pi * alpha, xp = pi / alpha;
    for (int n = 1; n <= nmax; ++n) {
        auto tm = exp_over_sin(n, cm, xm);
        auto tp = exp_over_sin(n, cp, xp);
        if (!tm || !tp) return std::nullopt;
        const double sg = (n % 2 == 0) ? 1.0 : -1.0;
        sum -= sg * (*tm + *tp) / (2.0 * n);
    }
    return sum;
}

std::optional<cplx> g_series(const HyperbolicPair& p, cplx w) {
    if (w.real() >= 0.0) return g_series_pos(p, w);
    auto r = g_series_pos(p, -w);
    if (!r) return std::nullopt;
    return -*r;
}

}  // namespace

cplx g_integral(const HyperbolicPair& p, cplx z, double tol) {
    require_pair(p);
    const cplx ap = p.a_plus, am = p.a_minus;
    const double half = 0.5 * (ap.real() + am.real());
    if (!(std::abs(z.imag()) < half))
        raise(ErrorKind::OutsideStrip, "|Im z| < (Re a+ + Re a-)/2 violated (" + std::to_string(std::abs(z.imag())) +
                                           " >= " + std::to_string(half) + ")");
    if (z == 0.0) return 0.0;
    const cplx A = ap + am, P = ap * am;
    const double kappa = A.real() - 2.0 * std::abs(z.imag());
    const double amax = std::max(std::abs(ap), std::abs(am));
    const double ys = std::min({1.0, pi / (2.0 * amax), 1.0 / std::abs(z)});

    // [0, ys] from the power series
    const auto r = small_y_series(ap, am, z);
    cplx head = 0.0;
    double ypow = ys;  // ys^{2k-1}
    for (int k = 1; k < small_y_terms; ++k) {
        head += r[k] * ypow / (2.0 * k - 1.0);
        ypow *= ys * ys;
    }
    head *= z / P;

    const double Y = std::max(2.0 * ys, (std::log(10.0 / tol) + 2.0) / kappa);
    const cplx e1 = 2.0 * I * z - A, e2 = -2.0 * I * z - A;
    auto f = [&](double y) -> cplx {
        const cplx d = expm1(-2.0 * ap * y) * expm1(-2.0 * am * y);
        const cplx first = (std::exp(e1 * y) - std::exp(e2 * y)) / (I * d);
        return (first - z / (P * y)) / y;
    };
    QuadOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 0.1;
    const double width = std::min(2.0, pi / std::max(std::abs(z.real()), 1e-9));
    opt.initial_panels = std::max(1, static_cast<int>(std::ceil((Y - ys) / width)));
    const QuadratureValue body = integrate_real(f, ys, Y, opt);
    const cplx tail = -z / (P * Y);
    return head + body.value + tail;
}

LogValue log_gamma_h(const HyperbolicPair& p, cplx z, double tol, GammaMethod method, GammaDiagnostics* diag) {
    require_pair(p);
    const cplx ap = p.a_plus, am = p.a_minus;
    GammaDiagnostics local;
    GammaDiagnostics& dg = diag ? *diag : local;
    if (method == GammaMethod::automatic) {
        if (auto g = g_series(p, z)) {
            dg.used_series = true;
            return {I * *g, 0};
        }
    }
    LogValue acc;
    cplx w = z;
    // shift along i a- (factor 2cosh(pi u / a+)), then along i a+
    auto shift = [&](cplx step, cplx other) {
        const double k = std::round(w.imag() / step.real());
        if (std::abs(k) > 1e4) raise(ErrorKind::ShiftOverflow, "more than 1e4 functional-equation steps needed");
        const long kk = static_cast<long>(k);
        const cplx is = I * step;
        if (kk > 0) {
            const cplx base = w - double(kk) * is;
            for (long j = 0; j < kk; ++j) acc *= cosh_factor(base + double(j) * is + 0.5 * is, other);
            w = base;
        } else if (kk < 0) {
            const cplx base = w + double(-kk) * is;
            for (long j = 1; j <= -kk; ++j) acc /= cosh_factor(base - double(j) * is + 0.5 * is, other);
            w = base;
        }
        dg.shift_steps += static_cast<int>(std::abs(kk));
    };
    shift(am, ap);
    if (std::abs(w.imag()) > 0.5 * ap.real()) shift(ap, am);
    if (acc.order < 0) raise(ErrorKind::AtPole, "Gamma_h pole near z");
    if (method == GammaMethod::automatic) {
        if (auto g = g_series(p, w)) {
            dg.used_series = true;
            acc.log += I * *g;
            return acc;
        }
    }
    acc.log += I * g_integral(p, w, tol);
    return acc;
}

cplx gamma_h(const HyperbolicPair& p, cplx z, double tol, GammaMethod method) {
    return log_gamma_h(p, z, tol, method).value();
}

cplx gamma_h_product(const HyperbolicPair& p, cplx z, double tol) {
    require_pair(p);
    const cplx ap = p.a_plus, am = p.a_minus;
    const cplx alpha = ap / am;
    if (!(alpha.imag() > 0.0))
        raise(ErrorKind::DegenerateRatio, "Im(a+/a-) > 0 required; swap a+ and a- or use gamma_h");
    LogValue v = log_qpoch_exp(I * pi + I * pi * alpha - 2.0 * pi * z / am, two_pi_i * alpha, tol);
    v /= log_qpoch_exp(I * pi - I * pi / alpha - 2.0 * pi * z / ap, -two_pi_i / alpha, tol);
    v.log += -I * pi * (alpha + 1.0 / alpha) / 24.0 - I * pi * z * z / (2.0 * ap * am);
    return v.value();
}

LogValue log_tau_factorial(cplx z, const TauParameter& tp, double tol, FactorialPath path) {
    const cplx tau = tp.tau();
    bool trig = tp.regime() == Regime::trigonometric;
    if (path == FactorialPath::trigonometric) trig = true;
    if (path == FactorialPath::hyperbolic) trig = false;
    if (trig) {
        if (!(tau.imag() > 0.0)) raise(ErrorKind::RegimeUnsupported, "product form needs Im tau > 0");
        LogValue num = log_qpoch_exp(-two_pi_i * z, -two_pi_i / tau, tol);
        LogValue den = log_qpoch_exp(two_pi_i * tau * z, two_pi_i * tau, tol);
        // coincident zero/pole pairs: each contributes the limit -1/tau
        const int pairs = std::min(num.order, den.order);
        LogValue out = num / den;
        if (pairs > 0) out.log += static_cast<double>(pairs) * std::log(-1.0 / tau);
        return out;
    }
    if (!(tau.real() < 0.0 && tau.imag() >= 0.0))
        raise(ErrorKind::RegimeUnsupported, "hyperbolic form needs Re tau < 0 and Im tau >= 0");
    const cplx c0 = 0.5 + 0.5 / tau;
    const cplx u = z - c0;
    LogValue out = log_gamma_h({-1.0 / tau, 1.0}, I * u, tol);
    out.log += tp.log_q_pow(u * u / 4.0) + 0.5 * tp.log_modular_k();
    return out;
}

cplx tau_factorial(cplx z, const TauParameter& tp, double tol, FactorialPath path) {
    return log_tau_factorial(z, tp, tol, path).value();
}

LogValue log_tau_factorials(const std::vector<cplx>& zs, const TauParameter& tp, double tol) {
    LogValue acc;
    for (cplx z : zs) acc *= log_tau_factorial(z, tp, tol);
    return acc;
}

namespace {

struct Acc {
    double re = 1.0, im = 0.0;
    double lre = 0.0, lim = 0.0;  // accumulated log
    void mul(double a, double b) {
        const double r = re * a - im * b;
        im = re * b + im * a;
        re = r;
        const double n = re * re + im * im;
        if (n > 1e200 || n < 1e-200) flush();
    }
    void flush() {
        const cplx l = std::log(cplx(re, im));
        lre += l.real();
        lim += l.imag();
        re = 1.0;
        im = 0.0;
    }
    cplx log() {
        flush();
        return {lre, lim};
    }
};

}  // namespace

LogValue log_elliptic_gamma(cplx zval, cplx p1, cplx p2, double tol) {
    if (!(std::abs(p1) < 1.0 && std::abs(p2) < 1.0)) raise(ErrorKind::BaseOutOfRange, "|p1|, |p2| < 1 required");
    if (zval == 0.0) raise(ErrorKind::AtPole, "z = 0");
    const double a1 = std::abs(p1), a2 = std::abs(p2);
    const double eps = tol / 10.0 * (1.0 - a1) * (1.0 - a2) * 0.5;
    Acc num, den;
    int order = 0;
    cplx xk = zval;                 // z p1^k
    cplx yk = p1 * p2 / zval;       // z^-1 p1^{k+1} p2
    const double pr = p2.real(), pi2 = p2.imag();
    for (long k = 0; k < 1'000'000; ++k) {
        const double ax = std::abs(xk), ay = std::abs(yk);
        if (ax < eps && ay < eps) break;
        double xr = xk.real(), xi = xk.imag(), yr = yk.real(), yi = yk.imag();
        for (long m = 0; m < 1'000'000; ++m) {
            const double mx = std::hypot(xr, xi), my = std::hypot(yr, yi);
            if (mx < eps && my < eps) break;
            const double dr = 1.0 - xr, di = -xi;
            if (std::hypot(dr, di) < zero_factor_tol * (1.0 + mx))
                --order;
            else
                den.mul(dr, di);
            const double nr = 1.0 - yr, ni = -yi;
            if (std::hypot(nr, ni) < zero_factor_tol * (1.0 + my))
                ++order;
            else
                num.mul(nr, ni);
            double t = xr * pr - xi * pi2;
            xi = xr * pi2 + xi * pr;
            xr = t;
            t = yr * pr - yi * pi2;
            yi = yr * pi2 + yi * pr;
            yr = t;
            if (pr == 0.0 && pi2 == 0.0) {
                xr = xi = yr = yi = 0.0;
            }
        }
        xk *= p1;
        yk *= p1;
        if (p1 == 0.0) {
            xk = 0.0;
            yk = 0.0;
        }
    }
    return {num.log() - den.log(), order};
}

cplx elliptic_gamma(cplx zval, cplx p1, cplx p2, double tol) {
    return log_elliptic_gamma(zval, p1, p2, tol).value();
}

LogValue log_renorm_elliptic_gamma(cplx z, double tau, double r, double tol) {
    if (!(tau < 0.0 && r > 0.0)) raise(ErrorKind::BaseOutOfRange, "tau < 0 and r > 0 required");
    const cplx x = std::exp(two_pi_i * r * z);
    LogValue v = log_elliptic_gamma(x, std::exp(2.0 * pi * r / tau), std::exp(-2.0 * pi * r), tol);
    v.log += I * pi * (2.0 * tau * z + I - I * tau) / (12.0 * r);
    return v;
}

cplx renorm_elliptic_gamma(cplx z, double tau, double r, double tol) {
    return log_renorm_elliptic_gamma(z, tau, r, tol).value();
}

cplx renorm_elliptic_gamma_limit(cplx z, double tau, double tol) {
    const TauParameter tp(cplx(tau, 0.0));
    const cplx u = 0.5 / tau - 0.5 - I * z;
    LogValue v = log_tau_factorial(1.0 + I * z, tp, tol).inverse();
    v.log += tp.log_q_pow(u * u / 4.0) + 0.5 * tp.log_modular_k();
    return v.value();
}

}  // namespace hypbeta
