#pragma once

#include <array>
#include <functional>

#include "hypbeta/complex.hpp"
#include "hypbeta/qseries.hpp"
#include "hypbeta/tau.hpp"

namespace hypbeta {

// sum over m in Z of exp(logterm(z + m)); each side stops after five consecutive
// negligible terms and at least 15 terms.
SeriesValue fold_sum(const std::function<LogValue(cplx)>& logterm, cplx z, double tol);

// Summands of the three bilateral families (log form, Gaussian included).
LogValue log_phitilde_1psi1(cplx z, cplx a, cplx b, const TauParameter& tp);
LogValue log_phitilde_6psi6(cplx z, const std::array<cplx, 4>& s, const TauParameter& tp);
LogValue log_phitilde_8psi8(cplx z, const std::array<cplx, 5>& t, const TauParameter& tp);

// theta_{-1/tau}(z)
cplx theta_inverse(cplx z, const TauParameter& tp, double tol = default_tol);

double jacobi_inversion_residual(cplx z, const TauParameter& tp, double tol = 1e-14);

// closed form (1/sqrt(-i tau)) (ab;q)/(a,b;q)
cplx ramanujan_1psi1_constant(cplx a, cplx b, const TauParameter& tp);
double ramanujan_1psi1_residual(cplx z, cplx a, cplx b, const TauParameter& tp, double tol = 1e-14);

// closed form (1/sqrt(-i tau)) prod (s_k s_m/q;q) / (s1 s2 s3 s4/q^3;q)
cplx bailey_6psi6_constant(const std::array<cplx, 4>& s, const TauParameter& tp);
double bailey_6psi6_residual(cplx z, const std::array<cplx, 4>& s, const TauParameter& tp, double tol = 1e-14);

struct Weak8Psi8Data {
    std::array<cplx, 5> t{};
    std::array<cplx, 5> tau_j{};  // t_j = q^{tau_j}
    TauParameter tau{cplx(0.0, 1.0)};
    cplx A{1.0, 0.0};
    cplx C1{0.0, 0.0};
    cplx C2{0.0, 0.0};
    cplx gamma_exp{0.0, 0.0};
};

// From exponents tau_j (t_j = q^{tau_j}); needs Im tau > 0.
Weak8Psi8Data make_weak8psi8(const std::array<cplx, 5>& tau_j, const TauParameter& tp, double tol = 1e-15);

// Phi(z) in the q-Pochhammer form.
cplx weak_8psi8_phi(const Weak8Psi8Data& d, cplx z, double tol = 1e-15);
// Phi(z) in the qtilde form with the factor q^gamma.
cplx weak_8psi8_phi_nr(const Weak8Psi8Data& d, cplx z, double tol = 1e-15);
// Direct bilateral sum phi^+(z).
SeriesValue weak_8psi8_bilateral(const Weak8Psi8Data& d, cplx z, double tol = 1e-14);

// C1 + C2 q^gamma prod(...)
cplx key_lemma_lhs(const Weak8Psi8Data& d, double tol = 1e-15);
// (1/sqrt(-i tau)) prod_{k<m} (t_k t_m/q;q) / prod_j (A/(q^3 t_j);q)
cplx key_lemma_rhs(const Weak8Psi8Data& d, double tol = 1e-15);
double key_lemma_residual(const Weak8Psi8Data& d, double tol = 1e-15);

struct AWParameterSet {
    std::array<cplx, 4> t{};
    cplx qtilde{0.0, 0.0};
};

cplx aw_polynomial(int n, double x, const AWParameterSet& p);

// log of the fused Askey-Wilson weight J(x) with general s_j, t_j.
LogValue log_fused_aw_weight(cplx x, const std::array<cplx, 4>& s, const std::array<cplx, 4>& t,
                             const TauParameter& tp);

struct PairingValue {
    cplx value{0.0, 0.0};
    double err_est = 0.0;
    double scale = 0.0;  // integral of |p_m p_n J|
};

// <p_m, p_n> against J with s_j = q^{tau_j}, t_j = exp(-2 pi i tau_j).
PairingValue aw_orthogonality(int m, int n, const std::array<cplx, 4>& tau_j, const TauParameter& tp,
                              double tol = 1e-12);

}  // namespace hypbeta
