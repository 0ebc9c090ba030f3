#pragma once

#include <vector>

#include "hypbeta/complex.hpp"

namespace hypbeta {

struct SeriesValue {
    cplx value{0.0, 0.0};
    long terms_used = 0;
    // Bound on the omitted tail, relative to max(1, |value|).
    double trunc_err = 0.0;
    bool converged = false;
    // Set when the term ratio stays above 0.95 (near the convergence boundary).
    bool slow = false;
};

inline constexpr double default_tol = 1e-15;

void require_base(cplx q);

// (a;q)_inf
SeriesValue qpoch_inf(cplx a, cplx q, double tol = default_tol);

// log (a;q)_inf with exact zero factors counted in order.
LogValue log_qpoch(cplx a, cplx q, double tol = default_tol);

// log (e^la; e^lq)_inf from exponents; accurate when e^la q^j is close to 1.
// |e^lq| < 1 required.
LogValue log_qpoch_exp(cplx la, cplx lq, double tol = default_tol);

// (z;q)_alpha = (z;q)_inf / (z q^alpha;q)_inf, alpha in exponent form q^alpha = e^{alpha log q}.
SeriesValue qpoch_alpha(cplx z, cplx q, cplx alpha, double tol = default_tol);

// (z;q)_m finite product.
cplx qpoch_finite(cplx z, cplx q, long m);

enum class ThetaMethod { series, triple_product };

// theta_tau(z) = sum_m q^{m^2/2} e^{2 pi i m z}, q = e^{2 pi i tau}.
SeriesValue theta(cplx z, cplx tau, ThetaMethod method = ThetaMethod::series,
                  double tol = default_tol);

// eta(sigma) = e^{pi i sigma/12} (e^{2 pi i sigma}; e^{2 pi i sigma})_inf
cplx dedekind_eta(cplx sigma, double tol = default_tol);

// r+1 phi r with z^m weights.
SeriesValue phi_series(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx q,
                       cplx z, double tol = default_tol);

// 8W7(a1; a4, a5, a6, a7, a8; q, z)
SeriesValue w8_7(cplx a1, const std::vector<cplx>& a, cplx q, cplx z, double tol = default_tol);

// r psi r: sum over m in Z of (upper;q)_m / (lower;q)_m z^m.
SeriesValue bilateral_psi(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx q,
                          cplx z, double tol = default_tol);

// Extended-precision variants used as oracles.
namespace ext {
using lcplx = std::complex<long double>;
lcplx qpoch_inf(lcplx a, lcplx q, long double tol = 1e-19L);
lcplx theta(lcplx z, lcplx tau, long double tol = 1e-19L);
lcplx phi_series(const std::vector<lcplx>& upper, const std::vector<lcplx>& lower, lcplx q,
                 lcplx z, long double tol = 1e-19L);
}  // namespace ext

}  // namespace hypbeta
