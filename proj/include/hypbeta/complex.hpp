#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace hypbeta {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};
inline constexpr cplx two_pi_i{0.0, 2.0 * std::numbers::pi};

// Factors |1 - x| below this (relative to 1 + |x|) count as exact zeros.
inline constexpr double zero_factor_tol = 1e-14;

// e^w - 1 without cancellation for small |w|.
inline cplx expm1(cplx w) {
    if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
    const cplx h = 0.5 * w;
    return 2.0 * std::exp(h) * std::sinh(h);
}

// log(1 + w) without cancellation for small |w|.
inline cplx log1p(cplx w) {
    if (std::abs(w) > 0.5) return std::log(1.0 + w);
    const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
    return {re, std::atan2(w.imag(), 1.0 + w.real())};
}

// Product of logs with exact zero/pole bookkeeping.
struct LogValue {
    cplx log{0.0, 0.0};
    int order = 0;  // zeros minus poles

    LogValue& operator*=(const LogValue& o) {
        log += o.log;
        order += o.order;
        return *this;
    }
    LogValue& operator/=(const LogValue& o) {
        log -= o.log;
        order -= o.order;
        return *this;
    }
    LogValue& mul_log(cplx l) {
        log += l;
        return *this;
    }
    friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
    friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
    LogValue inverse() const { return {-log, -order}; }

    // Throws AtPole when order < 0.
    cplx value() const;
};

// log(1 - e^w) as a LogValue; exact zero when e^w == 1 to working precision.
LogValue log_one_minus_exp(cplx w);

// log(1 - x) as a LogValue.
LogValue log_one_minus(cplx x);

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace hypbeta
