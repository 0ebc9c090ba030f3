#include "hypbeta/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypbeta/errors.hpp"

namespace hypbeta {

namespace {

constexpr long max_terms = 2'000'000;

bool factor_is_zero(cplx f, cplx x) { return std::abs(f) < zero_factor_tol * (1.0 + std::abs(x)); }

std::string cstr(cplx z) {
    return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

// Smallest n >= 0 with a q^n == 1 to working precision, or -1.
long termination_index(cplx a, cplx q, long limit = 5000) {
    cplx x = a;
    for (long n = 0; n < limit; ++n) {
        if (factor_is_zero(1.0 - x, x)) return n;
        if (std::abs(x) < 1e-3 && std::abs(q) < 1.0) return -1;
        x *= q;
    }
    return -1;
}

}  // namespace

void require_base(cplx q) {
    if (!(std::abs(q) < 1.0)) raise(ErrorKind::BaseOutOfRange, "|q| = " + std::to_string(std::abs(q)) + " >= 1");
}

SeriesValue qpoch_inf(cplx a, cplx q, double tol) {
    require_base(q);
    SeriesValue r;
    const double aq = std::abs(q);
    cplx prod{1.0, 0.0};
    cplx x = a;
    for (long j = 0; j < max_terms; ++j) {
        const cplx f = 1.0 - x;
        r.terms_used = j + 1;
        if (factor_is_zero(f, x)) {
            r.value = 0.0;
            r.trunc_err = 0.0;
            r.converged = true;
            return r;
        }
        prod *= f;
        x *= q;
        const double ax = std::abs(x);
        if (ax < 1.0) {
            const double tail = ax / ((1.0 - aq) * (1.0 - ax));
            if (tail <= tol / 10.0 || ax == 0.0) {
                r.value = prod;
                r.trunc_err = tail * std::abs(prod) / std::max(1.0, std::abs(prod));
                r.converged = true;
                return r;
            }
        }
    }
    r.value = prod;
    r.trunc_err = 1.0;
    return r;
}

LogValue log_qpoch_exp(cplx la, cplx lq, double tol) {
    if (!(lq.real() < 0.0)) raise(ErrorKind::BaseOutOfRange, "|q| >= 1 in log_qpoch");
    const double aq = std::exp(lq.real());
    const double stop = std::log(tol / 10.0 * (1.0 - aq) * 0.5);
    LogValue out;
    cplx prod{1.0, 0.0};
    for (long j = 0; j < max_terms; ++j) {
        const cplx w = la + static_cast<double>(j) * lq;
        if (w.real() < stop) break;
        if (w.real() > 30.0) {
            out *= log_one_minus_exp(w);
            continue;
        }
        const double t = std::remainder(w.imag(), 2.0 * pi);
        const cplx wr{w.real(), t};
        const cplx f = std::abs(wr) < 0.5 ? -expm1(wr) : 1.0 - std::exp(wr);
        // rounding in la + j lq grows with the size of the exponent
        const double slack = 8e-16 * (std::abs(la) + static_cast<double>(j) * std::abs(lq));
        if (std::abs(f) < zero_factor_tol * (1.0 + std::exp(w.real())) + slack) {
            out.order += 1;
            continue;
        }
        prod *= f;
        const double n = std::norm(prod);
        if (n > 1e200 || n < 1e-200) {
            out.log += std::log(prod);
            prod = 1.0;
        }
    }
    out.log += std::log(prod);
    return out;
}

LogValue log_qpoch(cplx a, cplx q, double tol) {
    require_base(q);
    if (a == 0.0) return {};
    if (q == 0.0) return log_one_minus(a);
    return log_qpoch_exp(std::log(a), std::log(q), tol);
}

cplx qpoch_finite(cplx z, cplx q, long m) {
    cplx p{1.0, 0.0};
    cplx x = z;
    for (long j = 0; j < m; ++j) {
        p *= 1.0 - x;
        x *= q;
    }
    return p;
}

SeriesValue qpoch_alpha(cplx z, cplx q, cplx alpha, double tol) {
    require_base(q);
    const double m = std::round(alpha.real());
    if (alpha.imag() == 0.0 && alpha.real() == m && m >= 0.0 && m <= 1e5) {
        SeriesValue r;
        r.value = qpoch_finite(z, q, static_cast<long>(m));
        r.terms_used = std::max(1L, static_cast<long>(m));
        r.converged = true;
        return r;
    }
    const cplx qa = q == 0.0 ? cplx(0.0) : std::exp(alpha * std::log(q));
    SeriesValue den = qpoch_inf(z * qa, q, tol);
    if (den.value == 0.0) raise(ErrorKind::DivisionByZeroPole, "(z q^alpha;q)_inf vanishes");
    SeriesValue num = qpoch_inf(z, q, tol);
    SeriesValue r;
    r.value = num.value / den.value;
    r.terms_used = std::max(num.terms_used, den.terms_used);
    r.trunc_err = num.trunc_err + den.trunc_err;
    r.converged = num.converged && den.converged;
    return r;
}

SeriesValue theta(cplx z, cplx tau, ThetaMethod method, double tol) {
    if (!(tau.imag() > 0.0)) raise(ErrorKind::NomeOutOfRange, "theta needs Im tau > 0");
    SeriesValue r;
    if (method == ThetaMethod::triple_product) {
        const cplx lq = two_pi_i * tau;
        LogValue v = log_qpoch_exp(lq, lq, tol);
        const cplx h = I * pi * tau + I * pi;
        v *= log_qpoch_exp(h + two_pi_i * z, lq, tol);
        v *= log_qpoch_exp(h - two_pi_i * z, lq, tol);
        r.value = v.value();
        r.terms_used = static_cast<long>(std::ceil(std::log(tol) / (-2.0 * pi * tau.imag()))) + 1;
        r.trunc_err = tol;
        r.converged = true;
        return r;
    }
    const cplx a = I * pi * tau;
    const cplx b = two_pi_i * z;
    cplx sum = 1.0;
    const double peak = std::abs(z.imag()) / tau.imag() + 1.0;
    long m = 1;
    for (; m < max_terms; ++m) {
        const double md = static_cast<double>(m);
        const cplx tp = std::exp(a * md * md + b * md);
        const cplx tm = std::exp(a * md * md - b * md);
        sum += tp + tm;
        const double mag = std::abs(tp) + std::abs(tm);
        if (md > peak && mag <= tol / 10.0 * std::max(1.0, std::abs(sum))) break;
    }
    r.value = sum;
    r.terms_used = 2 * m + 1;
    r.trunc_err = tol / 10.0;
    r.converged = m < max_terms;
    return r;
}

cplx dedekind_eta(cplx sigma, double tol) {
    if (!(sigma.imag() > 0.0)) raise(ErrorKind::NomeOutOfRange, "eta needs Im sigma > 0");
    const cplx lq = two_pi_i * sigma;
    return std::exp(lq / 24.0) * std::exp(log_qpoch_exp(lq, lq, tol).log);
}

namespace {

// Generic ratio-driven summation shared by phi_series and w8_7.
template <class Ratio>
SeriesValue sum_by_ratio(Ratio ratio, cplx first, long terminate_at, cplx z, double tol) {
    SeriesValue r;
    cplx term = first;
    cplx sum = term;
    int passes = 0;
    long m = 0;
    bool slow = false;
    for (; m < max_terms; ++m) {
        if (terminate_at >= 0 && m >= terminate_at) {
            r.value = sum;
            r.terms_used = m + 1;
            r.converged = true;
            return r;
        }
        const cplx rat = ratio(m);
        term *= rat;
        sum += term;
        double rho = std::abs(rat);
        if (rho > 0.95) slow = true;
        if (rho >= 1.0) rho = std::max(std::abs(z), 0.5);
        if (rho < 1.0) {
            const double tail = std::abs(term) * rho / (1.0 - rho) / std::max(1.0, std::abs(sum));
            if (tail <= tol) {
                if (++passes >= 2) {
                    r.value = sum;
                    r.terms_used = m + 2;
                    r.trunc_err = tail;
                    r.converged = true;
                    r.slow = slow;
                    return r;
                }
            } else {
                passes = 0;
            }
        }
    }
    r.value = sum;
    r.terms_used = m;
    r.trunc_err = 1.0;
    r.slow = slow;
    return r;
}

long first_termination(const std::vector<cplx>& upper, cplx q) {
    long t = -1;
    for (cplx a : upper) {
        long n = termination_index(a, q);
        if (n >= 0 && (t < 0 || n < t)) t = n;
    }
    return t;
}

void check_lower(const std::vector<cplx>& lower, cplx q, long until) {
    for (cplx b : lower) {
        long n = termination_index(b, q, until < 0 ? 5000 : until);
        if (n >= 0 && (until < 0 || n < until))
            raise(ErrorKind::PoleInLowerParams, "lower parameter " + cstr(b) + " equals q^-" + std::to_string(n));
    }
}

}  // namespace

SeriesValue phi_series(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx q,
                       cplx z, double tol) {
    require_base(q);
    if (upper.size() != lower.size() + 1)
        raise(ErrorKind::ParameterOutOfRange, "phi_series expects r+1 upper and r lower parameters");
    const long nt = first_termination(upper, q);
    // terms vanish from index nt+1 on
    const long stop = nt >= 0 ? nt + 1 : -1;
    check_lower(lower, q, nt);
    if (stop < 0 && !(std::abs(z) < 1.0))
        raise(ErrorKind::DivergentSeries, "|z| >= 1 and the series does not terminate");
    auto ratio = [&](long m) {
        const cplx qm = std::pow(q, static_cast<double>(m));
        cplx num = z, den = 1.0 - qm * q;
        for (cplx a : upper) num *= 1.0 - a * qm;
        for (cplx b : lower) den *= 1.0 - b * qm;
        return num / den;
    };
    return sum_by_ratio(ratio, 1.0, stop >= 0 ? stop - 1 : -1, z, tol);
}

SeriesValue w8_7(cplx a1, const std::vector<cplx>& a, cplx q, cplx z, double tol) {
    require_base(q);
    if (a.size() != 5) raise(ErrorKind::ParameterOutOfRange, "w8_7 expects five parameters a4..a8");
    std::vector<cplx> upper{a1};
    upper.insert(upper.end(), a.begin(), a.end());
    std::vector<cplx> lower;
    for (cplx ak : a) lower.push_back(q * a1 / ak);
    const long nt = first_termination(upper, q);
    const long stop = nt >= 0 ? nt + 1 : -1;
    check_lower(lower, q, nt);
    if (stop < 0 && !(std::abs(z) < 1.0))
        raise(ErrorKind::DivergentSeries, "|z| >= 1 and the series does not terminate");
    // well-poised factor handled through its own ratio
    auto ratio = [&](long m) {
        const cplx qm = std::pow(q, static_cast<double>(m));
        cplx num = z * (1.0 - a1 * qm * qm * q * q), den = (1.0 - qm * q) * (1.0 - a1 * qm * qm);
        for (cplx u : upper) num *= 1.0 - u * qm;
        for (cplx b : lower) den *= 1.0 - b * qm;
        return num / den;
    };
    return sum_by_ratio(ratio, 1.0, stop >= 0 ? stop - 1 : -1, z, tol);
}

SeriesValue bilateral_psi(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx q,
                          cplx z, double tol) {
    require_base(q);
    if (upper.size() != lower.size())
        raise(ErrorKind::ParameterOutOfRange, "bilateral_psi expects equally many upper and lower parameters");
    if (!(std::abs(z) < 1.0)) raise(ErrorKind::OutsideAnnulus, "|z| < 1 violated");
    cplx pb = 1.0, pa = 1.0;
    for (cplx b : lower) pb *= b;
    for (cplx a : upper) pa *= a;
    const double inner = std::abs(pb) / std::abs(pa);
    if (!(inner < std::abs(z)))
        raise(ErrorKind::OutsideAnnulus, "|b1...br/(a1...ar)| < |z| violated (" + std::to_string(inner) +
                                             " >= " + std::to_string(std::abs(z)) + ")");
    SeriesValue r;
    cplx sum = 1.0;
    long used = 1;
    bool slow = false;
    double tail = 0.0;
    // m > 0
    {
        cplx term = 1.0;
        int small = 0;
        for (long m = 0; m < max_terms; ++m) {
            const cplx qm = std::pow(q, static_cast<double>(m));
            cplx num = z, den = 1.0;
            for (cplx a : upper) num *= 1.0 - a * qm;
            for (cplx b : lower) den *= 1.0 - b * qm;
            if (factor_is_zero(den, 1.0))
                raise(ErrorKind::PoleInLowerParams, "lower parameter hits q^-" + std::to_string(m));
            const cplx rat = num / den;
            if (std::abs(rat) > 0.95) slow = true;
            term *= rat;
            sum += term;
            ++used;
            if (std::abs(term) < tol * std::max(1.0, std::abs(sum))) {
                if (++small >= 5) {
                    tail += std::abs(term);
                    break;
                }
            } else {
                small = 0;
            }
            if (m + 1 == max_terms) r.trunc_err = 1.0;
        }
    }
    // m < 0: t_{m-1}/t_m = prod (q^{1-m} - b)/(q^{1-m} - a) / z
    {
        cplx term = 1.0;
        int small = 0;
        for (long m = 0; m < max_terms; ++m) {
            const cplx qm = std::pow(q, static_cast<double>(m + 1));
            cplx num = 1.0, den = z;
            for (cplx b : lower) num *= qm - b;
            for (cplx a : upper) den *= qm - a;
            if (den == 0.0) raise(ErrorKind::PoleInLowerParams, "upper parameter hits q^" + std::to_string(m + 1));
            const cplx rat = num / den;
            if (std::abs(rat) > 0.95) slow = true;
            term *= rat;
            sum += term;
            ++used;
            if (std::abs(term) < tol * std::max(1.0, std::abs(sum))) {
                if (++small >= 5) {
                    tail += std::abs(term);
                    break;
                }
            } else {
                small = 0;
            }
            if (m + 1 == max_terms) r.trunc_err = 1.0;
        }
    }
    r.value = sum;
    r.terms_used = used;
    r.trunc_err = std::max(r.trunc_err, tail / std::max(1.0, std::abs(sum)));
    r.converged = r.trunc_err <= tol;
    r.slow = slow;
    return r;
}

namespace ext {

lcplx qpoch_inf(lcplx a, lcplx q, long double tol) {
    lcplx p = 1.0L, x = a;
    for (long j = 0; j < max_terms; ++j) {
        p *= 1.0L - x;
        x *= q;
        if (std::abs(x) < tol * (1.0L - std::abs(q)) / 10.0L) break;
    }
    return p;
}

lcplx theta(lcplx z, lcplx tau, long double tol) {
    const long double pil = std::numbers::pi_v<long double>;
    const lcplx i{0.0L, 1.0L};
    lcplx s = 1.0L;
    const long double peak = std::abs(z.imag()) / tau.imag() + 1.0L;
    for (long m = 1; m < max_terms; ++m) {
        const long double md = static_cast<long double>(m);
        const lcplx tp = std::exp(i * pil * tau * md * md + 2.0L * i * pil * z * md);
        const lcplx tm = std::exp(i * pil * tau * md * md - 2.0L * i * pil * z * md);
        s += tp + tm;
        if (md > peak && std::abs(tp) + std::abs(tm) < tol * std::max(1.0L, std::abs(s))) break;
    }
    return s;
}

lcplx phi_series(const std::vector<lcplx>& upper, const std::vector<lcplx>& lower, lcplx q, lcplx z,
                 long double tol) {
    lcplx term = 1.0L, sum = 1.0L, qm = 1.0L;
    for (long m = 0; m < max_terms; ++m) {
        lcplx num = z, den = 1.0L - qm * q;
        for (auto a : upper) num *= 1.0L - a * qm;
        for (auto b : lower) den *= 1.0L - b * qm;
        term *= num / den;
        sum += term;
        qm *= q;
        if (std::abs(term) < tol * std::max(1.0L, std::abs(sum)) && m > 3) break;
    }
    return sum;
}

}  // namespace ext

}  // namespace hypbeta
