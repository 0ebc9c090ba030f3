#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypbeta/errors.hpp"
#include "hypbeta/hypgamma.hpp"
#include "hypbeta/integrals.hpp"
#include "hypbeta/qseries.hpp"
#include "hypbeta/sums.hpp"

namespace hypbeta {

namespace {

using Vals = std::vector<cplx>;

LogValue P(cplx x, cplx q, double tol = 1e-16) { return log_qpoch(x, q, tol); }
LogValue Pe(cplx la, cplx lq, double tol = 1e-16) { return log_qpoch_exp(la, lq, tol); }
LogValue F(cplx z, const TauParameter& tp) { return log_tau_factorial(z, tp, 1e-15); }

cplx prod(const Vals& v, size_t from = 0, size_t to = 0) {
    if (to == 0) to = v.size();
    cplx p = 1.0;
    for (size_t j = from; j < to; ++j) p *= v[j];
    return p;
}
cplx sum(const Vals& v) {
    cplx s = 0.0;
    for (cplx x : v) s += x;
    return s;
}

Constraint lt(std::string name, double value, double bound) { return {std::move(name), value, bound, true}; }
Constraint gt(std::string name, double value, double bound) { return {std::move(name), value, bound, false}; }

void tau_upper(std::vector<Constraint>& c, const IdentityParams& p) { c.push_back(gt("Im(τ)>0", p.tau.imag(), 0.0)); }
void tau_hyper(std::vector<Constraint>& c, const IdentityParams& p) {
    c.push_back(lt("Re(τ)<0", p.tau.real(), 0.0));
    c.push_back(gt("Im(τ)≥0", p.tau.imag(), -1e-300));
}
void moduli_below_one(std::vector<Constraint>& c, const Vals& v, const std::string& sym, size_t from, size_t to,
                      int first_index) {
    for (size_t j = from; j < to; ++j)
        c.push_back(lt("|" + sym + "_" + std::to_string(int(j - from) + first_index) + "|<1", std::abs(v[j]), 1.0));
}

void near(double dist, const std::string& what) {
    if (dist < 1e-3) raise(ErrorKind::PoleNearContour, what + " (distance " + std::to_string(dist) + ")");
}

SideValue from(const QuadratureValue& q) { return {q.value, q.err_est, q.evals, q.contour.truncation_radius}; }

SideValue circle(const std::function<cplx(cplx)>& g, double tol) { return from(integrate_circle(g, tol)); }

// min over |Re| (axis = 0) or |Im - shift| (axis = 1) of +-(base + k g1 + m g2)
double lattice_axis_distance(cplx base, cplx g1, int k0, cplx g2, int m0, int axis, double shift = 0.0) {
    double d = 1e300;
    for (int k = k0; k < k0 + 40; ++k)
        for (int m = m0; m < m0 + 40; ++m) {
            const cplx w = base + double(k) * g1 + double(m) * g2;
            for (cplx v : {w, -w}) d = std::min(d, axis == 0 ? std::abs(v.real()) : std::abs(v.imag() - shift));
        }
    return d;
}

// ---- trigonometric circle integrals

SideValue trig_ramanujan_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const cplx q = tp.q(), h = tp.q_pow(0.5), c = p.values[0], d = p.values[1];
    return circle(
        [&](cplx z) {
            LogValue v = P(-h / z, q) * P(-h * z, q);
            v /= P(-h * c / z, q) * P(-h * d * z, q);
            return v.value();
        },
        tol);
}
cplx trig_ramanujan_rhs(const IdentityParams& p, double) {
    const TauParameter tp(p.tau);
    const cplx q = tp.q(), c = p.values[0], d = p.values[1];
    return (P(q * c, q) * P(q * d, q) / (P(q, q) * P(q * c * d, q))).value();
}

LogValue aw_core(cplx z, const Vals& t, size_t from, size_t to, cplx q) {
    LogValue v = P(z * z, q) * P(1.0 / (z * z), q);
    for (size_t j = from; j < to; ++j) v /= P(t[j] * z, q) * P(t[j] / z, q);
    return v;
}

SideValue trig_aw_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const cplx q = tp.q();
    return circle([&](cplx z) { return aw_core(z, p.values, 0, 4, q).value(); }, tol);
}
cplx trig_aw_rhs(const IdentityParams& p, double) {
    const TauParameter tp(p.tau);
    const cplx q = tp.q();
    const Vals& t = p.values;
    LogValue v = P(prod(t), q) / P(q, q);
    for (int k = 0; k < 4; ++k)
        for (int m = k + 1; m < 4; ++m) v /= P(t[k] * t[m], q);
    return 2.0 * v.value();
}

SideValue trig_nr_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const cplx q = tp.q(), A = prod(p.values);
    return circle(
        [&](cplx z) {
            LogValue v = aw_core(z, p.values, 0, 5, q);
            v *= P(A * z, q) * P(A / z, q);
            return v.value();
        },
        tol);
}
cplx trig_nr_rhs(const IdentityParams& p, double) {
    const TauParameter tp(p.tau);
    const cplx q = tp.q();
    const Vals& t = p.values;
    const cplx A = prod(t);
    LogValue v = P(q, q).inverse();
    for (int j = 0; j < 5; ++j) v *= P(A / t[j], q);
    for (int k = 0; k < 5; ++k)
        for (int m = k + 1; m < 5; ++m) v /= P(t[k] * t[m], q);
    return 2.0 * v.value();
}

// ---- elliptic

LogValue EG(cplx x, cplx p1, cplx p2) { return log_elliptic_gamma(x, p1, p2, 1e-16); }

SideValue ell_nr_lhs(const IdentityParams& p, double tol) {
    const Vals& v = p.values;
    const cplx p1 = v[5], p2 = v[6];
    const cplx A = prod(v, 0, 5);
    return circle(
        [&](cplx z) {
            LogValue w;
            for (int j = 0; j < 5; ++j) w *= EG(v[j] * z, p1, p2) * EG(v[j] / z, p1, p2);
            w /= EG(z * z, p1, p2) * EG(1.0 / (z * z), p1, p2) * EG(A * z, p1, p2) * EG(A / z, p1, p2);
            return w.value();
        },
        tol);
}
cplx ell_nr_rhs(const IdentityParams& p, double) {
    const Vals& v = p.values;
    const cplx p1 = v[5], p2 = v[6];
    const cplx A = prod(v, 0, 5);
    LogValue w = (P(p1, p1) * P(p2, p2)).inverse();
    for (int k = 0; k < 5; ++k)
        for (int m = k + 1; m < 5; ++m) w *= EG(v[k] * v[m], p1, p2);
    for (int j = 0; j < 5; ++j) w /= EG(A / v[j], p1, p2);
    return 2.0 * w.value();
}

// ---- real-line integrals with |q| < 1

SideValue line(const std::function<cplx(cplx)>& f, double decay, double tol) {
    return from(integrate_line(f, Contour::real_line(), decay, tol));
}

double geometric_rate(std::initializer_list<cplx> ratios) {
    double r = 1e300;
    bool any = false;
    for (cplx x : ratios) {
        if (x == 0.0) continue;
        r = std::min(r, -std::log(std::abs(x)));
        any = true;
    }
    return any ? r : 0.0;
}

SideValue gauss_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    return line([&](cplx x) { return std::exp(tp.log_q_pow(x * x / 2.0)); }, 0.0, tol);
}
cplx gauss_rhs(const IdentityParams& p, double) { return 1.0 / TauParameter(p.tau).sqrt_mit(); }

// (-qt^{1/2} c e^{-2 pi i x}, -qt^{1/2} d e^{2 pi i x}; qt)
LogValue ram_denominator(cplx x, cplx c, cplx d, const TauParameter& tp) {
    const cplx lqt = tp.log_qt_pow(1.0);
    LogValue v;
    if (c != 0.0) v *= Pe(std::log(c) + I * pi + 0.5 * lqt - two_pi_i * x, lqt);
    if (d != 0.0) v *= Pe(std::log(d) + I * pi + 0.5 * lqt + two_pi_i * x, lqt);
    return v;
}

cplx fused_ram_integrand(cplx x, cplx a, cplx b, cplx c, cplx d, const TauParameter& tp) {
    return (log_phitilde_1psi1(x, a, b, tp) / ram_denominator(x, c, d, tp)).value();
}

cplx fused_ram_closed(cplx a, cplx b, cplx c, cplx d, const TauParameter& tp) {
    const cplx q = tp.q(), qt = tp.qtilde();
    LogValue v = P(a * b, q) * P(qt * c, qt) * P(qt * d, qt);
    v /= P(qt * c * d, qt) * P(a, q) * P(b, q);
    return v.value() / tp.sqrt_mit();
}

SideValue fused_ram_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const Vals& v = p.values;
    return line([&](cplx x) { return fused_ram_integrand(x, v[0], v[1], v[2], v[3], tp); },
                geometric_rate({v[0], v[1]}), tol);
}
cplx fused_ram_rhs(const IdentityParams& p, double) {
    const Vals& v = p.values;
    return fused_ram_closed(v[0], v[1], v[2], v[3], TauParameter(p.tau));
}

SideValue ram1_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const Vals& v = p.values;
    return line([&](cplx x) { return fused_ram_integrand(x, 0.0, 0.0, v[0], v[1], tp); }, 0.0, tol);
}
cplx ram1_rhs(const IdentityParams& p, double) {
    return fused_ram_closed(0.0, 0.0, p.values[0], p.values[1], TauParameter(p.tau));
}

SideValue ram2_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const Vals& v = p.values;
    return line([&](cplx x) { return fused_ram_integrand(x, v[0], v[1], 0.0, 0.0, tp); }, geometric_rate({v[0], v[1]}),
                tol);
}
cplx ram2_rhs(const IdentityParams& p, double) {
    return fused_ram_closed(p.values[0], p.values[1], 0.0, 0.0, TauParameter(p.tau));
}

std::array<cplx, 4> arr4(const Vals& v, size_t from) { return {v[from], v[from + 1], v[from + 2], v[from + 3]}; }

SideValue fused_aw_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const auto s = arr4(p.values, 0), t = arr4(p.values, 4);
    const cplx q = tp.q();
    const double rate = -std::log(std::abs(s[0] * s[1] * s[2] * s[3] / (q * q * q)));
    return line([&](cplx x) { return log_fused_aw_weight(x, s, t, tp).value(); }, rate, tol);
}
cplx fused_aw_closed(const std::array<cplx, 4>& s, const std::array<cplx, 4>& t, const TauParameter& tp) {
    const cplx q = tp.q(), qt = tp.qtilde();
    LogValue v = P(t[0] * t[1] * t[2] * t[3], qt) / P(s[0] * s[1] * s[2] * s[3] / (q * q * q), q);
    for (int k = 0; k < 4; ++k)
        for (int m = k + 1; m < 4; ++m) {
            v *= P(s[k] * s[m] / q, q);
            v /= P(t[k] * t[m], qt);
        }
    return 2.0 * v.value() / tp.sqrt_mit();
}
cplx fused_aw_rhs(const IdentityParams& p, double) {
    return fused_aw_closed(arr4(p.values, 0), arr4(p.values, 4), TauParameter(p.tau));
}

SideValue mm_cherednik_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const cplx l2 = 2.0 * tp.log_qt_pow(1.0);
    const cplx k = p.values[0];
    return line(
        [&](cplx x) {
            LogValue v;
            v.log = tp.log_q_pow(x * x / 2.0);
            for (double sg : {1.0, -1.0}) {
                const cplx e = sg * 2.0 * two_pi_i * x;
                v *= Pe(e, l2);
                v /= Pe(k * l2 + e, l2);
            }
            return v.value();
        },
        0.0, tol);
}
cplx mm_cherednik_rhs(const IdentityParams& p, double) {
    const TauParameter tp(p.tau);
    const cplx l2 = 2.0 * tp.log_qt_pow(1.0), k = p.values[0];
    return 2.0 * (Pe(k * l2, l2) / Pe(2.0 * k * l2, l2)).value() / tp.sqrt_mit();
}

SideValue etingof_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const auto s = arr4(p.values, 0);
    const double eps = p.values[4].real();
    const cplx q = tp.q();
    const double rate = -std::log(std::abs(s[0] * s[1] * s[2] * s[3] / (q * q * q)));
    return from(integrate_line([&](cplx z) { return log_phitilde_6psi6(z, s, tp).value(); },
                               Contour::shifted_line(eps), rate, tol));
}
cplx etingof_rhs(const IdentityParams& p, double) {
    return bailey_6psi6_constant(arr4(p.values, 0), TauParameter(p.tau));
}
void etingof_poles(const IdentityParams& p) {
    const cplx it = 1.0 / p.tau;
    const double eps = p.values[4].real();
    double d = 1e300;
    for (int n = -30; n <= 30; ++n)
        for (cplx w : {cplx(-1.0) + double(n) * it, cplx(-1.0) + (n + 0.5) * it, cplx(-0.5) + double(n) * it})
            for (cplx v : {w, -w}) d = std::min(d, std::abs(v.imag() - eps));
    near(d, "pole of the integrand near the line Im z = epsilon");
}

SideValue fused_nr_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    return line([&](cplx x) { return hyper_nr_integrand(x, p.values, tp); }, 0.0, tol);
}
cplx fused_nr_rhs(const IdentityParams& p, double) { return -hyper_nr_rhs(p.values, TauParameter(p.tau)); }

SideValue mm_nr_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const Vals& t = p.values;
    const cplx lqt = tp.log_qt_pow(1.0);
    const cplx lA = std::log(prod(t));
    return line(
        [&](cplx x) {
            LogValue v;
            v.log = tp.log_q_pow(x * x / 2.0);
            for (double sg : {1.0, -1.0}) {
                const cplx e = sg * two_pi_i * x;
                v *= Pe(e, lqt) * Pe(I * pi + e, lqt) * Pe(0.5 * lqt + e, lqt) * Pe(lA + e, lqt);
                for (int j = 0; j < 5; ++j) v /= Pe(std::log(t[j]) + e, lqt);
            }
            return v.value();
        },
        0.0, tol);
}
cplx mm_nr_rhs(const IdentityParams& p, double) {
    const TauParameter tp(p.tau);
    const cplx qt = tp.qtilde();
    const Vals& t = p.values;
    const cplx A = prod(t);
    LogValue v;
    for (int j = 0; j < 5; ++j) v *= P(A / t[j], qt);
    for (int k = 0; k < 5; ++k)
        for (int m = k + 1; m < 5; ++m) v /= P(t[k] * t[m], qt);
    return 2.0 * v.value() / tp.sqrt_mit();
}

// ---- hyperbolic

SideValue imag_line(const std::function<cplx(cplx)>& f, double decay, double tol) {
    return from(integrate_line(f, Contour::imaginary_line(), decay, tol));
}

SideValue hyper_ram_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const cplx a = p.values[0], b = p.values[1];
    const double rate = 2.0 * pi * std::min(-(p.tau * a).real(), -(p.tau * b).real());
    return imag_line([&](cplx z) { return hyper_ramanujan_integrand(z, a, b, tp); }, rate, tol);
}
cplx hyper_ram_rhs(const IdentityParams& p, double) {
    return hyper_ramanujan_rhs(p.values[0], p.values[1], TauParameter(p.tau));
}
void hyper_ram_poles(const IdentityParams& p) {
    const cplx it = 1.0 / p.tau;
    const cplx a = p.values[0], b = p.values[1];
    double d = lattice_axis_distance(-a + 0.5 - 0.5 * it, -it, 0, 1.0, 0, 0);
    d = std::min(d, lattice_axis_distance(b - 0.5 + 0.5 * it, it, 0, -1.0, 0, 0));
    near(d, "pole of the integrand near the imaginary axis");
}

SideValue hyper_aw_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const double rate = 2.0 * pi * (1.0 - ((sum(p.values) - 3.0) * p.tau).real());
    return imag_line([&](cplx z) { return hyper_aw_integrand(z, p.values, tp); }, rate, tol);
}
cplx hyper_aw_rhs_p(const IdentityParams& p, double) { return hyper_aw_rhs(p.values, TauParameter(p.tau)); }

void hyper_tj_poles(const IdentityParams& p, bool nr) {
    const cplx it = 1.0 / p.tau;
    double d = 1e300;
    for (cplx tj : p.values) d = std::min(d, lattice_axis_distance(tj, it, 0, -1.0, 1, 0));
    if (nr) d = std::min(d, lattice_axis_distance(-sum(p.values), it, 1, -1.0, -4, 0));
    near(d, "pole of the integrand near the imaginary axis");
}

SideValue hyper_nr_lhs(const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    return imag_line([&](cplx z) { return hyper_nr_integrand(z, p.values, tp); }, 0.0, tol);
}
cplx hyper_nr_rhs_p(const IdentityParams& p, double) { return hyper_nr_rhs(p.values, TauParameter(p.tau)); }

// ---- elliptic degeneration at finite r

LogValue RG(cplx z, double tau, double r) { return log_renorm_elliptic_gamma(z, tau, r, 1e-16); }

SideValue degeneration_lhs(const IdentityParams& p, double tol) {
    const double tau = p.tau.real();
    const double r = p.values[5].real();
    Vals tj(p.values.begin(), p.values.begin() + 5);
    const cplx a = sum(tj);
    auto f = [&](cplx xc) {
        const cplx x = xc;
        LogValue v;
        for (cplx t : tj) v *= RG(I - I * t + x, tau, r) * RG(I - I * t - x, tau, r);
        v /= RG(2.0 * x, tau, r) * RG(-2.0 * x, tau, r);
        v /= RG(5.0 * I - I * a + x, tau, r) * RG(5.0 * I - I * a - x, tau, r);
        return v.value();
    };
    // even integrand: twice the half interval
    QuadOptions o;
    o.rel_tol = tol;
    o.abs_tol = 0.0;
    o.initial_panels = std::max(4, int(1.0 / r));
    QuadratureValue q = integrate_segment(f, 0.0, 0.5 / r, o);
    q.value *= 2.0;
    q.err_est *= 2.0;
    return {q.value, q.err_est, q.evals, 0.5 / r};
}

cplx degeneration_rhs(const IdentityParams& p, double) {
    const double tau = p.tau.real();
    const double r = p.values[5].real();
    Vals tj(p.values.begin(), p.values.begin() + 5);
    const cplx a = sum(tj);
    const cplx p1 = std::exp(2.0 * pi * r / tau), p2 = std::exp(-2.0 * pi * r);
    LogValue v = (P(p2, p2) * P(p1, p1)).inverse();
    v.log += std::log(2.0 / r) + pi / (12.0 * r) * (tau - 1.0);
    for (int k = 0; k < 5; ++k)
        for (int m = k + 1; m < 5; ++m) v *= RG(2.0 * I - I * tj[k] - I * tj[m], tau, r);
    for (int j = 0; j < 5; ++j) v /= RG(4.0 * I - I * a + I * tj[j], tau, r);
    return v.value();
}

// ---- calibration

SideValue euler_lhs(const IdentityParams& p, double tol) {
    const cplx a = p.values[0], b = p.values[1];
    // x = u^k near 0 and 1 - x = v^m near 1 smooth out the endpoint powers
    const int k = std::max(1, int(std::ceil(2.0 / a.real())));
    const int m = std::max(1, int(std::ceil(2.0 / b.real())));
    auto w = [&](double x, double y) {  // y = 1 - x
        return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log(y));
    };
    QuadOptions o;
    o.rel_tol = tol;
    o.abs_tol = 0.0;
    o.initial_panels = 4;
    const double ul = std::pow(0.5, 1.0 / k), vl = std::pow(0.5, 1.0 / m);
    QuadratureValue left = integrate_real(
        [&](double u) {
            if (u <= 0.0) return cplx(0.0);
            const double x = std::pow(u, k);
            return double(k) * std::pow(u, k - 1) * w(x, 1.0 - x);
        },
        0.0, ul, o);
    QuadratureValue right = integrate_real(
        [&](double v) {
            if (v <= 0.0) return cplx(0.0);
            const double y = std::pow(v, m);
            return double(m) * std::pow(v, m - 1) * w(1.0 - y, y);
        },
        0.0, vl, o);
    return {left.value + right.value, left.err_est + right.err_est, left.evals + right.evals, 0.0};
}
cplx euler_rhs(const IdentityParams& p, double) {
    const cplx a = p.values[0], b = p.values[1];
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

// ---- registry construction

Vals rep(cplx v, int n) { return Vals(size_t(n), v); }

std::vector<std::string> names(const std::string& s, int first, int n) {
    std::vector<std::string> out;
    for (int j = 0; j < n; ++j) out.push_back(s + std::to_string(first + j));
    return out;
}

std::array<double, 4> box(double rl, double rh, double il, double ih) { return {rl, rh, il, ih}; }

std::vector<IdentityDescriptor> build() {
    std::vector<IdentityDescriptor> R;
    const cplx neg_sqrt2(-std::numbers::sqrt2, 0.0);

    {
        IdentityDescriptor d;
        d.id = "trig_ramanujan";
        d.title = "Ramanujan integral over the unit circle";
        d.param_names = {"c", "d"};
        d.defaults = {cplx(0.0, 0.3), {0.5, cplx(0.3, 0.2)}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            const double h = std::exp(pi * p.tau.imag());
            c.push_back(lt("|c|<|q^−1/2|", std::abs(p.values[0]), h));
            c.push_back(lt("|d|<|q^−1/2|", std::abs(p.values[1]), h));
            return c;
        };
        d.lhs = trig_ramanujan_lhs;
        d.rhs = trig_ramanujan_rhs;
        d.pole_check = [](const IdentityParams& p) {
            const double h = std::exp(-pi * p.tau.imag());
            near(1.0 - std::abs(p.values[0]) * h, "pole -c q^{1/2} near the unit circle");
            near(1.0 - std::abs(p.values[1]) * h, "pole -1/(d q^{1/2}) near the unit circle");
        };
        d.box.ranges = {box(-1.5, 1.5, -1.5, 1.5), box(-1.5, 1.5, -1.5, 1.5)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "trig_askey_wilson";
        d.title = "Askey-Wilson integral";
        d.param_names = names("t", 1, 4);
        d.defaults = {cplx(0.0, 0.3), {0.3, 0.2, -0.25, cplx(0.0, 0.4)}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            moduli_below_one(c, p.values, "t", 0, 4, 1);
            return c;
        };
        d.lhs = trig_aw_lhs;
        d.rhs = trig_aw_rhs;
        d.pole_check = [](const IdentityParams& p) {
            for (cplx t : p.values) near(1.0 - std::abs(t), "pole t_j near the unit circle");
        };
        d.box.ranges = std::vector(4, box(-0.7, 0.7, -0.7, 0.7));
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "trig_nassrallah_rahman";
        d.title = "Nassrallah-Rahman integral";
        d.param_names = names("t", 0, 5);
        d.defaults = {cplx(0.0, 0.3), {0.3, 0.2, -0.25, cplx(0.0, 0.4), cplx(0.1, 0.1)}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            moduli_below_one(c, p.values, "t", 0, 5, 0);
            return c;
        };
        d.lhs = trig_nr_lhs;
        d.rhs = trig_nr_rhs;
        d.pole_check = [](const IdentityParams& p) {
            for (cplx t : p.values) near(1.0 - std::abs(t), "pole t_j near the unit circle");
        };
        d.box.ranges = std::vector(5, box(-0.65, 0.65, -0.65, 0.65));
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "elliptic_nassrallah_rahman";
        d.title = "elliptic Nassrallah-Rahman integral";
        d.cls = IdentityClass::elliptic;
        d.uses_tau = false;
        d.param_names = {"t0", "t1", "t2", "t3", "t4", "p1", "p2"};
        d.defaults = {cplx(0.0, 1.0), {0.6, 0.5, -0.55, cplx(0.0, 0.5), 0.45, 0.1, 0.2}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            moduli_below_one(c, p.values, "t", 0, 5, 0);
            c.push_back(lt("|p1|<1", std::abs(p.values[5]), 1.0));
            c.push_back(lt("|p2|<1", std::abs(p.values[6]), 1.0));
            c.push_back(lt("|p1p2|<|A|", std::abs(p.values[5] * p.values[6]), std::abs(prod(p.values, 0, 5))));
            return c;
        };
        d.lhs = ell_nr_lhs;
        d.rhs = ell_nr_rhs;
        d.pole_check = [](const IdentityParams& p) {
            for (int j = 0; j < 5; ++j) near(1.0 - std::abs(p.values[j]), "pole t_j near the unit circle");
            near(1.0 - std::abs(p.values[5] * p.values[6] / prod(p.values, 0, 5)), "pole p1 p2/A near the unit circle");
        };
        d.box.ranges = {box(0.4, 0.8, -0.2, 0.2), box(0.4, 0.8, -0.2, 0.2), box(-0.8, -0.4, -0.2, 0.2),
                        box(-0.2, 0.2, 0.4, 0.8),  box(0.4, 0.8, -0.2, 0.2), box(0.0, 0.3, -0.1, 0.1),
                        box(0.0, 0.3, -0.1, 0.1)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "gauss";
        d.title = "Gauss integral";
        d.defaults = {cplx(0.0, 1.0), {}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            return c;
        };
        d.lhs = gauss_lhs;
        d.rhs = gauss_rhs;
        d.box.tau_range = {-0.8, 0.8, 0.3, 2.0};
        R.push_back(d);
    }
    auto ram_domain = [](bool ab, bool cd) {
        return [ab, cd](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            size_t i = 0;
            if (ab) {
                c.push_back(lt("|a|<1", std::abs(p.values[0]), 1.0));
                c.push_back(lt("|b|<1", std::abs(p.values[1]), 1.0));
                i = 2;
            }
            if (cd) {
                const double h = std::exp(-pi * (1.0 / p.tau).imag());  // |qt^{-1/2}|
                c.push_back(lt("|c|<|q̃^−1/2|", std::abs(p.values[i]), h));
                c.push_back(lt("|d|<|q̃^−1/2|", std::abs(p.values[i + 1]), h));
            }
            return c;
        };
    };
    {
        IdentityDescriptor d;
        d.id = "fused_ramanujan";
        d.title = "fused Ramanujan integral";
        d.param_names = {"a", "b", "c", "d"};
        d.defaults = {cplx(0.0, 1.0), {0.5, 0.3, 0.5, cplx(0.0, 0.2)}};
        d.domain = ram_domain(true, true);
        d.lhs = fused_ram_lhs;
        d.rhs = fused_ram_rhs;
        d.box.ranges = {box(-0.6, 0.6, -0.6, 0.6), box(-0.6, 0.6, -0.6, 0.6), box(-3, 3, -3, 3), box(-3, 3, -3, 3)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "ram_lost_1";
        d.title = "Ramanujan lost-notebook integral, first kind";
        d.param_names = {"c", "d"};
        d.defaults = {cplx(0.0, 0.8), {0.7, cplx(-0.4, 0.3)}};
        d.domain = ram_domain(false, true);
        d.lhs = ram1_lhs;
        d.rhs = ram1_rhs;
        d.box.ranges = {box(-2, 2, -2, 2), box(-2, 2, -2, 2)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "ram_lost_2";
        d.title = "Ramanujan lost-notebook integral, second kind";
        d.param_names = {"a", "b"};
        d.defaults = {cplx(0.0, 0.8), {0.4, cplx(0.0, 0.6)}};
        d.domain = ram_domain(true, false);
        d.lhs = ram2_lhs;
        d.rhs = ram2_rhs;
        d.box.ranges = {box(-0.6, 0.6, -0.6, 0.6), box(-0.6, 0.6, -0.6, 0.6)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "hyper_ramanujan";
        d.title = "hyperbolic Ramanujan integral";
        d.cls = IdentityClass::hyperbolic;
        d.default_tol = 1e-6;
        d.param_names = {"alpha", "beta"};
        d.defaults = {neg_sqrt2, {0.3, 0.3}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_hyper(c, p);
            const cplx a = p.values[0], b = p.values[1], h = 0.5 / p.tau;
            c.push_back(lt("Re(τα)<0", (p.tau * a).real(), 0.0));
            c.push_back(lt("Re(τβ)<0", (p.tau * b).real(), 0.0));
            c.push_back(lt("Re(α−1/2+1/(2τ))<0", (a - 0.5 + h).real(), 0.0));
            c.push_back(lt("Re(β−1/2+1/(2τ))<0", (b - 0.5 + h).real(), 0.0));
            return c;
        };
        d.lhs = hyper_ram_lhs;
        d.rhs = hyper_ram_rhs;
        d.pole_check = hyper_ram_poles;
        d.box.ranges = {box(0.1, 0.75, -0.2, 0.2), box(0.1, 0.75, -0.2, 0.2)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "fused_askey_wilson";
        d.title = "fused Askey-Wilson integral";
        d.param_names = {"s1", "s2", "s3", "s4", "t1", "t2", "t3", "t4"};
        d.defaults = {cplx(0.0, 0.4), {0.12, 0.1, 0.15, -0.1, 0.3, 0.2, -0.25, cplx(0.0, 0.4)}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            const cplx q = std::exp(two_pi_i * p.tau);
            c.push_back(lt("|q^−3 s1s2s3s4|<1", std::abs(prod(p.values, 0, 4) / (q * q * q)), 1.0));
            moduli_below_one(c, p.values, "t", 4, 8, 1);
            return c;
        };
        d.lhs = fused_aw_lhs;
        d.rhs = fused_aw_rhs;
        d.box.ranges = {box(-0.15, 0.15, -0.15, 0.15), box(-0.15, 0.15, -0.15, 0.15), box(-0.15, 0.15, -0.15, 0.15),
                        box(-0.15, 0.15, -0.15, 0.15), box(-0.7, 0.7, -0.7, 0.7),     box(-0.7, 0.7, -0.7, 0.7),
                        box(-0.7, 0.7, -0.7, 0.7),     box(-0.7, 0.7, -0.7, 0.7)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "mm_cherednik";
        d.title = "one-variable Macdonald-Mehta integral (Cherednik form)";
        d.param_names = {"k"};
        d.defaults = {cplx(0.0, 0.5), {0.7}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            c.push_back(gt("k>0", p.values[0].real(), 0.0));
            c.push_back(lt("|Im k|=0", std::abs(p.values[0].imag()), 1e-300));
            return c;
        };
        d.lhs = mm_cherednik_lhs;
        d.rhs = mm_cherednik_rhs;
        d.box.ranges = {box(0.1, 3.0, 0.0, 0.0)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "etingof_type_limit";
        d.title = "regularized Macdonald-Mehta type integral on a shifted line";
        d.cls = IdentityClass::limit;
        d.param_names = {"s1", "s2", "s3", "s4", "eps"};
        d.defaults = {cplx(0.0, 0.3), {0.24, 0.24, 0.24, 0.24, 0.05}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            const cplx q = std::exp(two_pi_i * p.tau);
            c.push_back(lt("|q^−3 s1s2s3s4|<1", std::abs(prod(p.values, 0, 4) / (q * q * q)), 1.0));
            c.push_back(gt("ε>0", p.values[4].real(), 0.0));
            return c;
        };
        d.lhs = etingof_lhs;
        d.rhs = etingof_rhs;
        d.pole_check = etingof_poles;
        d.box.ranges = {box(0.1, 0.25, -0.02, 0.02), box(0.1, 0.25, -0.02, 0.02), box(0.1, 0.25, -0.02, 0.02),
                        box(0.1, 0.25, -0.02, 0.02), box(0.02, 0.3, 0.0, 0.0)};
        R.push_back(d);
    }
    auto aw_hyper_domain = [](const IdentityParams& p) {
        std::vector<Constraint> c;
        tau_hyper(c, p);
        for (size_t j = 0; j < p.values.size(); ++j)
            c.push_back(lt("Re(τ_" + std::to_string(j + 1) + ")<1", p.values[j].real(), 1.0));
        c.push_back(lt("Re((a−3)τ)<1", ((sum(p.values) - 3.0) * p.tau).real(), 1.0));
        return c;
    };
    {
        IdentityDescriptor d;
        d.id = "hyper_askey_wilson";
        d.title = "hyperbolic Askey-Wilson integral";
        d.cls = IdentityClass::hyperbolic;
        d.default_tol = 1e-6;
        d.param_names = {"tau1", "tau2", "tau3", "tau4"};
        d.defaults = {neg_sqrt2, rep(0.8, 4)};
        d.domain = aw_hyper_domain;
        d.lhs = hyper_aw_lhs;
        d.rhs = hyper_aw_rhs_p;
        d.pole_check = [](const IdentityParams& p) { hyper_tj_poles(p, false); };
        d.box.ranges = std::vector(4, box(0.5, 0.95, -0.3, 0.3));
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "fused_nassrallah_rahman";
        d.title = "fused Nassrallah-Rahman integral";
        d.param_names = names("tau", 0, 5);
        d.defaults = {cplx(0.0, 1.0), rep(cplx(0.8, -0.1), 5)};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            for (size_t j = 0; j < 5; ++j)
                c.push_back(lt("Im(τ_" + std::to_string(j) + ")<0", p.values[j].imag(), 0.0));
            c.push_back(gt("Im(a)>Im(1/τ)", sum(p.values).imag(), (1.0 / p.tau).imag()));
            return c;
        };
        d.lhs = fused_nr_lhs;
        d.rhs = fused_nr_rhs;
        d.box.ranges = std::vector(5, box(0.3, 0.95, -0.18, -0.02));
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "mm_nassrallah_rahman";
        d.title = "Macdonald-Mehta type Nassrallah-Rahman integral";
        d.param_names = names("t", 0, 5);
        d.defaults = {cplx(0.0, 0.5), {0.3, 0.2, -0.25, cplx(0.0, 0.4), cplx(0.1, 0.1)}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            tau_upper(c, p);
            moduli_below_one(c, p.values, "t", 0, 5, 0);
            return c;
        };
        d.lhs = mm_nr_lhs;
        d.rhs = mm_nr_rhs;
        d.box.ranges = std::vector(5, box(-0.65, 0.65, -0.65, 0.65));
        R.push_back(d);
    }
    auto nr_hyper_domain = [](const IdentityParams& p) {
        std::vector<Constraint> c;
        tau_hyper(c, p);
        for (size_t j = 0; j < 5; ++j)
            c.push_back(lt("Re(τ_" + std::to_string(j) + ")<1", p.values[j].real(), 1.0));
        c.push_back(gt("Re(a−1/τ)>4", (sum(Vals(p.values.begin(), p.values.begin() + 5)) - 1.0 / p.tau).real(), 4.0));
        return c;
    };
    {
        IdentityDescriptor d;
        d.id = "hyper_nassrallah_rahman";
        d.title = "hyperbolic Nassrallah-Rahman integral";
        d.cls = IdentityClass::hyperbolic;
        d.default_tol = 1e-6;
        d.param_names = names("tau", 0, 5);
        d.defaults = {neg_sqrt2, rep(0.8, 5)};
        d.domain = nr_hyper_domain;
        d.lhs = hyper_nr_lhs;
        d.rhs = hyper_nr_rhs_p;
        d.pole_check = [](const IdentityParams& p) { hyper_tj_poles(p, true); };
        d.box.ranges = std::vector(5, box(0.6, 0.95, -0.3, 0.3));
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "degeneration_ell_to_hyp";
        d.title = "elliptic Nassrallah-Rahman integral in renormalized form at scale r";
        d.cls = IdentityClass::limit;
        d.default_tol = 1e-6;
        d.param_names = {"tau0", "tau1", "tau2", "tau3", "tau4", "r"};
        d.defaults = {neg_sqrt2, {0.8, 0.8, 0.8, 0.8, 0.8, 0.1}};
        d.domain = [nr_hyper_domain](const IdentityParams& p) {
            std::vector<Constraint> c = nr_hyper_domain(p);
            c.push_back(lt("|Im(τ)|=0", std::abs(p.tau.imag()), 1e-300));
            c.push_back(gt("r>0", p.values[5].real(), 0.0));
            return c;
        };
        d.lhs = degeneration_lhs;
        d.rhs = degeneration_rhs;
        d.box.ranges = {box(0.7, 0.9, -0.1, 0.1), box(0.7, 0.9, -0.1, 0.1), box(0.7, 0.9, -0.1, 0.1),
                        box(0.7, 0.9, -0.1, 0.1), box(0.7, 0.9, -0.1, 0.1), box(0.1, 0.3, 0.0, 0.0)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "nr_to_aw_limit";
        d.title = "hyperbolic Nassrallah-Rahman integral approaching the Askey-Wilson case";
        d.cls = IdentityClass::limit;
        d.default_tol = 1e-6;
        d.param_names = names("tau", 0, 5);
        d.defaults = {neg_sqrt2, {cplx(0.8, -2.0), 0.8, 0.8, 0.8, 0.8}};
        d.domain = [nr_hyper_domain](const IdentityParams& p) {
            std::vector<Constraint> c = nr_hyper_domain(p);
            const cplx a4 = sum(Vals(p.values.begin() + 1, p.values.end()));
            c.push_back(lt("Re((τ1+τ2+τ3+τ4−3)τ)<1", ((a4 - 3.0) * p.tau).real(), 1.0));
            return c;
        };
        d.lhs = hyper_nr_lhs;
        d.rhs = hyper_nr_rhs_p;
        d.pole_check = [](const IdentityParams& p) { hyper_tj_poles(p, true); };
        d.box.ranges = {box(0.7, 0.9, -4.0, -1.0), box(0.7, 0.9, -0.2, 0.2), box(0.7, 0.9, -0.2, 0.2),
                        box(0.7, 0.9, -0.2, 0.2), box(0.7, 0.9, -0.2, 0.2)};
        R.push_back(d);
    }
    {
        IdentityDescriptor d;
        d.id = "euler_beta_warmup";
        d.title = "Euler beta integral";
        d.cls = IdentityClass::calibration;
        d.default_tol = 1e-9;
        d.uses_tau = false;
        d.param_names = {"a", "b"};
        d.defaults = {cplx(0.0, 1.0), {2.5, 1.5}};
        d.domain = [](const IdentityParams& p) {
            std::vector<Constraint> c;
            c.push_back(gt("Re(a)>0", p.values[0].real(), 0.0));
            c.push_back(gt("Re(b)>0", p.values[1].real(), 0.0));
            return c;
        };
        d.lhs = euler_lhs;
        d.rhs = euler_rhs;
        d.box.ranges = {box(0.3, 4.0, -2.0, 2.0), box(0.3, 4.0, -2.0, 2.0)};
        R.push_back(d);
    }
    for (IdentityDescriptor& d : R) {
        if (d.box.tau_range == std::array<double, 4>{0, 0, 0, 0}) {
            const cplx t = d.defaults.tau;
            d.box.tau_range = {t.real(), t.real(), t.imag(), t.imag()};
        }
    }
    return R;
}

}  // namespace

// ---- shared integrands

cplx hyper_ramanujan_integrand(cplx z, cplx alpha, cplx beta, const TauParameter& tp) {
    const cplx c0 = 0.5 + 0.5 / tp.tau();
    LogValue v = F(c0 + z, tp) * F(c0 - z, tp);
    v /= F(c0 + alpha + z, tp) * F(c0 + beta - z, tp);
    return v.value();
}

cplx hyper_aw_integrand(cplx z, const std::vector<cplx>& tj, const TauParameter& tp) {
    LogValue v = F(1.0 + 2.0 * z, tp) * F(1.0 - 2.0 * z, tp);
    for (cplx t : tj) v /= F(t + z, tp) * F(t - z, tp);
    return v.value();
}

cplx hyper_nr_integrand(cplx z, const std::vector<cplx>& tj, const TauParameter& tp) {
    const cplx a = sum(tj);
    LogValue v = F(1.0 + 2.0 * z, tp) * F(1.0 - 2.0 * z, tp) * F(a - 4.0 + z, tp) * F(a - 4.0 - z, tp);
    for (cplx t : tj) v /= F(t + z, tp) * F(t - z, tp);
    return v.value();
}

cplx hyper_ramanujan_rhs(cplx alpha, cplx beta, const TauParameter& tp) {
    const cplx it = 1.0 / tp.tau();
    LogValue v = F(it + alpha, tp) * F(it + beta, tp) / F(it + alpha + beta, tp);
    v.log += tp.log_modular_k();
    return -v.value() / tp.sqrt_mit();
}

cplx hyper_aw_rhs(const std::vector<cplx>& tj, const TauParameter& tp) {
    LogValue v = F(sum(tj) - 3.0, tp);
    for (size_t k = 0; k < tj.size(); ++k)
        for (size_t m = k + 1; m < tj.size(); ++m) v /= F(tj[k] + tj[m] - 1.0, tp);
    v.log += tp.log_modular_k();
    return -2.0 * v.value() / tp.sqrt_mit();
}

cplx hyper_nr_rhs(const std::vector<cplx>& tj, const TauParameter& tp) {
    const cplx a = sum(tj);
    LogValue v;
    for (cplx t : tj) v *= F(a - t - 3.0, tp);
    for (size_t k = 0; k < tj.size(); ++k)
        for (size_t m = k + 1; m < tj.size(); ++m) v /= F(tj[k] + tj[m] - 1.0, tp);
    v.log += tp.log_modular_k();
    return -2.0 * v.value() / tp.sqrt_mit();
}

SideValue hyperbolic_real_line_lhs(const std::string& id, const IdentityParams& p, double tol) {
    if (!(p.tau.imag() > 0.0 && p.tau.real() < 0.0))
        raise(ErrorKind::RegimeUnsupported, "real-line form needs Im tau > 0 and Re tau < 0");
    const TauParameter tp(p.tau);
    std::function<cplx(cplx)> f;
    if (id == "hyper_ramanujan")
        f = [&](cplx x) { return hyper_ramanujan_integrand(x, p.values[0], p.values[1], tp); };
    else if (id == "hyper_askey_wilson")
        f = [&](cplx x) { return hyper_aw_integrand(x, p.values, tp); };
    else if (id == "hyper_nassrallah_rahman")
        f = [&](cplx x) { return hyper_nr_integrand(x, p.values, tp); };
    else
        raise(ErrorKind::UnknownIdentity, "no real-line form for " + id);
    SideValue s = from(integrate_line(f, Contour::real_line(), 0.0, tol));
    s.value = -s.value;
    return s;
}

FoldCheck fusion_fold_check(const std::string& id, const IdentityParams& p, double tol) {
    const TauParameter tp(p.tau);
    const cplx lqt = tp.log_qt_pow(1.0);
    FoldCheck out;
    std::function<cplx(cplx)> psi;
    cplx constant;
    if (id == "fused_ramanujan") {
        const Vals& v = p.values;
        out.line = fused_ram_lhs(p, tol).value;
        constant = ramanujan_1psi1_constant(v[0], v[1], tp);
        psi = [&, v](cplx x) { return ram_denominator(x, v[2], v[3], tp).inverse().value(); };
    } else if (id == "fused_askey_wilson") {
        const auto s = arr4(p.values, 0), t = arr4(p.values, 4);
        out.line = fused_aw_lhs(p, tol).value;
        constant = bailey_6psi6_constant(s, tp);
        psi = [&, t](cplx x) {
            LogValue w;
            for (double sg : {1.0, -1.0}) {
                const cplx e = sg * two_pi_i * x;
                w *= Pe(e, lqt) * Pe(I * pi + e, lqt) * Pe(0.5 * lqt + e, lqt);
                for (int j = 0; j < 4; ++j) w /= Pe(std::log(t[j]) + e, lqt);
            }
            return w.value();
        };
    } else {
        raise(ErrorKind::UnknownIdentity, "no folded form for " + id);
    }
    QuadratureValue q = integrate_segment(
        [&](cplx x) { return psi(x) * theta_inverse(x, tp); }, cplx(0.0), cplx(1.0), tol / 10.0);
    out.folded = constant * q.value;
    out.err = std::abs(constant) * q.err_est;
    return out;
}

const std::vector<IdentityDescriptor>& registry() {
    static const std::vector<IdentityDescriptor> R = build();
    return R;
}

}  // namespace hypbeta
