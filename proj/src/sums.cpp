#include "hypbeta/sums.hpp"

#include <algorithm>
#include <cmath>

#include "hypbeta/errors.hpp"
#include "hypbeta/quadrature.hpp"

namespace hypbeta {

namespace {

// (e^{la}; e^{lq})_inf
LogValue P(cplx la, cplx lq, double tol = 1e-16) { return log_qpoch_exp(la, lq, tol); }

cplx safe_log(cplx x) { return std::log(x); }

}  // namespace

SeriesValue fold_sum(const std::function<LogValue(cplx)>& logterm, cplx z, double tol) {
    SeriesValue r;
    cplx sum = logterm(z).value();
    long used = 1;
    double last = 0.0;
    bool ok = true;
    for (int side : {1, -1}) {
        int small = 0;
        long m = 1;
        for (; m < 200000; ++m) {
            const cplx t = logterm(z + double(side * m)).value();
            sum += t;
            ++used;
            if (std::abs(t) <= tol * std::abs(sum) / 10.0) {
                if (++small >= 5 && m >= 15) {
                    last = std::max(last, std::abs(t));
                    break;
                }
            } else {
                small = 0;
            }
        }
        if (m >= 200000) ok = false;
    }
    r.value = sum;
    r.terms_used = used;
    r.trunc_err = last / std::max(1.0, std::abs(sum));
    r.converged = ok;
    return r;
}

LogValue log_phitilde_1psi1(cplx z, cplx a, cplx b, const TauParameter& tp) {
    const cplx lq = tp.log_q_pow(1.0);
    LogValue v;
    v.log = tp.log_q_pow(z * z / 2.0);
    if (a != 0.0) v *= P(safe_log(a) + I * pi + tp.log_q_pow(0.5 + z), lq);
    if (b != 0.0) v *= P(safe_log(b) + I * pi + tp.log_q_pow(0.5 - z), lq);
    return v;
}

namespace {

LogValue phi_denominator(cplx z, const TauParameter& tp) {
    const cplx lq = tp.log_q_pow(1.0);
    LogValue d;
    for (double sg : {1.0, -1.0}) {
        d *= P(tp.log_q_pow(1.0 + sg * z), lq);
        d *= P(I * pi + tp.log_q_pow(1.0 + sg * z), lq);
        d *= P(tp.log_q_pow(0.5 + sg * z), lq);
    }
    return d;
}

// 8psi8 summand from exponents t_j = q^{tau_j}
LogValue phitilde_8psi8_exp(cplx z, const std::array<cplx, 5>& tj, const TauParameter& tp) {
    const cplx lq = tp.log_q_pow(1.0);
    cplx a = 0.0;
    for (cplx x : tj) a += x;
    LogValue v;
    v.log = tp.log_q_pow(z * z / 2.0);
    for (cplx x : tj)
        for (double sg : {1.0, -1.0}) v *= P(tp.log_q_pow(x + sg * z), lq);
    v /= phi_denominator(z, tp);
    for (double sg : {1.0, -1.0}) v /= P(tp.log_q_pow(a - 4.0 + sg * z), lq);
    return v;
}

}  // namespace

LogValue log_phitilde_6psi6(cplx z, const std::array<cplx, 4>& s, const TauParameter& tp) {
    const cplx lq = tp.log_q_pow(1.0);
    LogValue v;
    v.log = tp.log_q_pow(z * z / 2.0);
    for (cplx sj : s) {
        if (sj == 0.0) continue;
        const cplx ls = safe_log(sj);
        for (double sg : {1.0, -1.0}) v *= P(ls + tp.log_q_pow(sg * z), lq);
    }
    v /= phi_denominator(z, tp);
    return v;
}

LogValue log_phitilde_8psi8(cplx z, const std::array<cplx, 5>& t, const TauParameter& tp) {
    const cplx lq = tp.log_q_pow(1.0);
    cplx la = 0.0;
    for (cplx x : t) la += safe_log(x);
    LogValue v;
    v.log = tp.log_q_pow(z * z / 2.0);
    for (cplx x : t) {
        const cplx lt = safe_log(x);
        for (double sg : {1.0, -1.0}) v *= P(lt + tp.log_q_pow(sg * z), lq);
    }
    v /= phi_denominator(z, tp);
    for (double sg : {1.0, -1.0}) v /= P(la + tp.log_q_pow(-4.0 + sg * z), lq);
    return v;
}

cplx theta_inverse(cplx z, const TauParameter& tp, double tol) {
    return theta(z, -1.0 / tp.tau(), ThetaMethod::series, tol).value;
}

static void require_trig(const TauParameter& tp) {
    if (!(tp.tau().imag() > 0.0)) raise(ErrorKind::NomeOutOfRange, "Im tau > 0 required");
}

double jacobi_inversion_residual(cplx z, const TauParameter& tp, double tol) {
    require_trig(tp);
    const SeriesValue lhs = fold_sum([&](cplx w) { return LogValue{tp.log_q_pow(w * w / 2.0), 0}; }, z, tol / 10.0);
    return std::abs(lhs.value - theta_inverse(z, tp, tol) / tp.sqrt_mit());
}

cplx ramanujan_1psi1_constant(cplx a, cplx b, const TauParameter& tp) {
    const cplx q = tp.q();
    LogValue v = log_qpoch(a * b, q) / (log_qpoch(a, q) * log_qpoch(b, q));
    return v.value() / tp.sqrt_mit();
}

double ramanujan_1psi1_residual(cplx z, cplx a, cplx b, const TauParameter& tp, double tol) {
    require_trig(tp);
    if (!(std::abs(a) > 0.0 && std::abs(a) < 1.0 && std::abs(b) > 0.0 && std::abs(b) < 1.0))
        raise(ErrorKind::ParameterOutOfRange, "0 < |a|, |b| < 1 required");
    const SeriesValue lhs = fold_sum([&](cplx w) { return log_phitilde_1psi1(w, a, b, tp); }, z, tol / 10.0);
    return std::abs(lhs.value - ramanujan_1psi1_constant(a, b, tp) * theta_inverse(z, tp, tol));
}

cplx bailey_6psi6_constant(const std::array<cplx, 4>& s, const TauParameter& tp) {
    const cplx q = tp.q();
    LogValue v;
    for (int k = 0; k < 4; ++k)
        for (int m = k + 1; m < 4; ++m) v *= log_qpoch(s[k] * s[m] / q, q);
    v /= log_qpoch(s[0] * s[1] * s[2] * s[3] / (q * q * q), q);
    return v.value() / tp.sqrt_mit();
}

double bailey_6psi6_residual(cplx z, const std::array<cplx, 4>& s, const TauParameter& tp, double tol) {
    require_trig(tp);
    const cplx q = tp.q();
    const double r = std::abs(s[0] * s[1] * s[2] * s[3] / (q * q * q));
    if (!(r < 1.0)) raise(ErrorKind::ParameterOutOfRange, "|q^-3 s1 s2 s3 s4| < 1 violated (" + std::to_string(r) + ")");
    const SeriesValue lhs = fold_sum([&](cplx w) { return log_phitilde_6psi6(w, s, tp); }, z, tol / 10.0);
    return std::abs(lhs.value - bailey_6psi6_constant(s, tp) * theta_inverse(z, tp, tol));
}

Weak8Psi8Data make_weak8psi8(const std::array<cplx, 5>& tau_j, const TauParameter& tp, double tol) {
    require_trig(tp);
    Weak8Psi8Data d;
    d.tau = tp;
    d.tau_j = tau_j;
    cplx a = 0.0;
    d.A = 1.0;
    for (int j = 0; j < 5; ++j) {
        d.t[j] = tp.q_pow(tau_j[j]);
        d.A *= d.t[j];
        a += tau_j[j];
    }
    const cplx lq = tp.log_q_pow(1.0);
    auto Q = [&](cplx u) { return P(tp.log_q_pow(u), lq, tol); };
    auto qp = [&](cplx u) { return tp.q_pow(u); };
    const cplx t0 = tau_j[0];
    LogValue c1;
    for (int j = 1; j < 5; ++j) c1 *= Q(t0 + tau_j[j] - 1.0) * Q(1.0 - t0 + tau_j[j]);
    c1 /= Q(a + t0 - 5.0) * Q(a - t0 - 3.0) * Q(3.0 - 2.0 * t0);
    const SeriesValue w1 = w8_7(qp(2.0 - 2.0 * t0),
                                {qp(2.0 - t0 - tau_j[1]), qp(2.0 - t0 - tau_j[2]), qp(2.0 - t0 - tau_j[3]),
                                 qp(2.0 - t0 - tau_j[4]), qp(a - t0 - 3.0)},
                                tp.q(), tp.q(), tol);
    d.C1 = c1.value() * w1.value / tp.sqrt_mit();
    LogValue c2;
    for (int j = 1; j < 5; ++j) c2 *= Q(4.0 - a + tau_j[j]) * Q(a + tau_j[j] - 4.0);
    c2 /= Q(5.0 - a - t0) * Q(a - t0 - 3.0) * Q(2.0 * a - 7.0);
    const SeriesValue w2 = w8_7(qp(2.0 * a - 8.0),
                                {qp(a - 3.0 - tau_j[0]), qp(a - 3.0 - tau_j[1]), qp(a - 3.0 - tau_j[2]),
                                 qp(a - 3.0 - tau_j[3]), qp(a - 3.0 - tau_j[4])},
                                tp.q(), tp.q(), tol);
    d.C2 = c2.value() * w2.value / tp.sqrt_mit();
    const cplx h = 0.5 / tp.tau();
    const cplx g1 = a - 4.5 - h, g2 = t0 - 0.5 - h;
    d.gamma_exp = g1 * g1 - g2 * g2;
    return d;
}

cplx weak_8psi8_phi(const Weak8Psi8Data& d, cplx z, double tol) {
    const TauParameter& tp = d.tau;
    const cplx lq = tp.log_q_pow(1.0);
    cplx a = 0.0;
    for (cplx x : d.tau_j) a += x;
    const cplx t0 = d.tau_j[0];
    LogValue f;
    for (double sg : {1.0, -1.0}) {
        f *= P(tp.log_q_pow(t0 + sg * z), lq, tol) * P(tp.log_q_pow(1.0 - t0 + sg * z), lq, tol);
        f /= P(tp.log_q_pow(a - 4.0 + sg * z), lq, tol) * P(tp.log_q_pow(5.0 - a + sg * z), lq, tol);
    }
    return d.C1 + f.value() * d.C2;
}

cplx weak_8psi8_phi_nr(const Weak8Psi8Data& d, cplx z, double tol) {
    const TauParameter& tp = d.tau;
    const cplx lqt = tp.log_qt_pow(1.0);
    cplx a = 0.0;
    for (cplx x : d.tau_j) a += x;
    const cplx t0 = d.tau_j[0];
    LogValue f;
    for (double sg : {1.0, -1.0}) {
        const cplx e = sg * two_pi_i * z;
        f *= P(-two_pi_i * t0 + e, lqt, tol) * P(lqt + two_pi_i * t0 + e, lqt, tol);
        f /= P(-two_pi_i * a + e, lqt, tol) * P(lqt + two_pi_i * a + e, lqt, tol);
    }
    f.log += tp.log_q_pow(d.gamma_exp);
    return d.C1 + f.value() * d.C2;
}

SeriesValue weak_8psi8_bilateral(const Weak8Psi8Data& d, cplx z, double tol) {
    return fold_sum([&](cplx w) { return phitilde_8psi8_exp(w, d.tau_j, d.tau); }, z, tol);
}

cplx key_lemma_lhs(const Weak8Psi8Data& d, double tol) {
    const TauParameter& tp = d.tau;
    const cplx lqt = tp.log_qt_pow(1.0);
    cplx a = 0.0;
    for (cplx x : d.tau_j) a += x;
    const cplx t0 = d.tau_j[0];
    LogValue f;
    for (int j = 1; j < 5; ++j) {
        const cplx tj = d.tau_j[j];
        f *= P(-two_pi_i * (t0 + tj), lqt, tol) * P(lqt + two_pi_i * (t0 + tj), lqt, tol);
        f /= P(-two_pi_i * (a - tj), lqt, tol) * P(lqt + two_pi_i * (a - tj), lqt, tol);
    }
    f.log += tp.log_q_pow(d.gamma_exp);
    return d.C1 + d.C2 * f.value();
}

cplx key_lemma_rhs(const Weak8Psi8Data& d, double tol) {
    const TauParameter& tp = d.tau;
    const cplx q = tp.q();
    // A recomputed from the parameters themselves
    cplx A = 1.0;
    for (cplx x : d.t) A *= x;
    LogValue v;
    for (int k = 0; k < 5; ++k)
        for (int m = k + 1; m < 5; ++m) v *= log_qpoch(d.t[k] * d.t[m] / q, q, tol);
    for (int j = 0; j < 5; ++j) v /= log_qpoch(A / (q * q * q * d.t[j]), q, tol);
    return v.value() / tp.sqrt_mit();
}

double key_lemma_residual(const Weak8Psi8Data& d, double tol) {
    return std::abs(key_lemma_lhs(d, tol) - key_lemma_rhs(d, tol));
}

cplx aw_polynomial(int n, double x, const AWParameterSet& p) {
    if (n < 0) raise(ErrorKind::ParameterOutOfRange, "n >= 0 required");
    const cplx qt = p.qtilde;
    const cplx e = std::exp(two_pi_i * x);
    const cplx T = p.t[0] * p.t[1] * p.t[2] * p.t[3];
    const cplx b1 = p.t[0] * p.t[1], b2 = p.t[0] * p.t[2], b3 = p.t[0] * p.t[3];
    cplx sum = 1.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
        const cplx qk = std::pow(qt, double(k));
        const cplx num = (1.0 - std::pow(qt, double(k - n))) * (1.0 - std::pow(qt, double(n - 1 + k)) * T) *
                         (1.0 - p.t[0] * e * qk) * (1.0 - p.t[0] / e * qk);
        const cplx den = (1.0 - qk * qt) * (1.0 - b1 * qk) * (1.0 - b2 * qk) * (1.0 - b3 * qk);
        if (std::abs(den) < zero_factor_tol) raise(ErrorKind::PoleInLowerParams, "lower parameter of p_n hits a pole");
        term *= num / den * qt;
        sum += term;
    }
    return sum;
}

LogValue log_fused_aw_weight(cplx x, const std::array<cplx, 4>& s, const std::array<cplx, 4>& t,
                             const TauParameter& tp) {
    const cplx lq = tp.log_q_pow(1.0), lqt = tp.log_qt_pow(1.0);
    LogValue v;
    v.log = tp.log_q_pow(x * x / 2.0);
    for (double sg : {1.0, -1.0}) {
        const cplx e = sg * two_pi_i * x;
        v *= P(e, lqt) * P(I * pi + e, lqt) * P(0.5 * lqt + e, lqt);
        v /= P(tp.log_q_pow(1.0 + sg * x), lq) * P(I * pi + tp.log_q_pow(1.0 + sg * x), lq) *
             P(tp.log_q_pow(0.5 + sg * x), lq);
        for (int j = 0; j < 4; ++j) {
            if (s[j] != 0.0) v *= P(std::log(s[j]) + tp.log_q_pow(sg * x), lq);
            if (t[j] != 0.0) v /= P(std::log(t[j]) + e, lqt);
        }
    }
    return v;
}

PairingValue aw_orthogonality(int m, int n, const std::array<cplx, 4>& tau_j, const TauParameter& tp, double tol) {
    require_trig(tp);
    std::array<cplx, 4> s{}, t{};
    cplx prod = 1.0;
    for (int j = 0; j < 4; ++j) {
        s[j] = tp.q_pow(tau_j[j]);
        t[j] = std::exp(-two_pi_i * tau_j[j]);
        prod *= s[j];
        if (!(std::abs(t[j]) < 1.0)) raise(ErrorKind::DomainViolation, "|t_j| < 1 violated");
    }
    const cplx q = tp.q();
    const double ratio = std::abs(prod / (q * q * q));
    if (!(ratio < 1.0)) raise(ErrorKind::DomainViolation, "|q^-3 s1 s2 s3 s4| < 1 violated");
    const AWParameterSet ap{t, tp.qtilde()};
    auto f = [&](cplx x) {
        const cplx w = log_fused_aw_weight(x, s, t, tp).value();
        return aw_polynomial(m, x.real(), ap) * aw_polynomial(n, x.real(), ap) * w;
    };
    const double rate = -std::log(ratio);
    const QuadratureValue sc = integrate_line([&](cplx x) { return cplx(std::abs(f(x))); }, Contour::real_line(), rate, 1e-6);
    const QuadratureValue r = integrate_line(f, Contour::real_line(), rate, tol, tol * sc.value.real());
    return {r.value, r.err_est, sc.value.real()};
}

}  // namespace hypbeta
