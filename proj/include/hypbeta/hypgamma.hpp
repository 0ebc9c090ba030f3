#pragma once

#include <vector>

#include "hypbeta/complex.hpp"
#include "hypbeta/tau.hpp"

namespace hypbeta {

struct HyperbolicPair {
    cplx a_plus;
    cplx a_minus;
};

void require_pair(const HyperbolicPair& p);

// Lattice base + m*g1 + n*g2 with m, n in [m_min, inf) (or (-inf, m_max]) style ranges.
struct LatticeSet {
    cplx base;
    cplx g1, g2;
    int sign1, sign2;  // +1: indices 0,1,2,...  -1: indices 0,-1,-2,...
};

struct PoleZeroList {
    LatticeSet zeros;
    LatticeSet poles;
};

PoleZeroList gamma_h_pole_zero(const HyperbolicPair& p);
PoleZeroList tau_factorial_pole_zero(const TauParameter& tp);

// Distance from z to the nearest point of the set (searched over a window).
double lattice_distance(const LatticeSet& s, cplx z, int window = 64);

// Defining integral; requires |Im z| < (Re a+ + Re a-)/2.
cplx g_integral(const HyperbolicPair& p, cplx z, double tol = 1e-14);

enum class GammaMethod { automatic, integral };

struct GammaDiagnostics {
    int shift_steps = 0;
    bool used_series = false;
};

// log Gamma_h with exact zero/pole order.
LogValue log_gamma_h(const HyperbolicPair& p, cplx z, double tol = 1e-14,
                     GammaMethod method = GammaMethod::automatic, GammaDiagnostics* diag = nullptr);

cplx gamma_h(const HyperbolicPair& p, cplx z, double tol = 1e-14,
             GammaMethod method = GammaMethod::automatic);

// Product representation; needs Im(a+/a-) > 0.
cplx gamma_h_product(const HyperbolicPair& p, cplx z, double tol = 1e-15);

// Overrides the regime dispatch of tp when set.
enum class FactorialPath { regime, trigonometric, hyperbolic };

LogValue log_tau_factorial(cplx z, const TauParameter& tp, double tol = 1e-14,
                           FactorialPath path = FactorialPath::regime);

cplx tau_factorial(cplx z, const TauParameter& tp, double tol = 1e-14,
                   FactorialPath path = FactorialPath::regime);

// Product of [z_k; tau] over the list.
LogValue log_tau_factorials(const std::vector<cplx>& zs, const TauParameter& tp, double tol = 1e-14);

LogValue log_elliptic_gamma(cplx zval, cplx p1, cplx p2, double tol = 1e-15);
cplx elliptic_gamma(cplx zval, cplx p1, cplx p2, double tol = 1e-15);

// exp(pi i (2 tau z + i - i tau)/(12 r)) Gamma(e^{2 pi i r z}; e^{2 pi r/tau}, e^{-2 pi r})
LogValue log_renorm_elliptic_gamma(cplx z, double tau, double r, double tol = 1e-15);
cplx renorm_elliptic_gamma(cplx z, double tau, double r, double tol = 1e-15);

// r -> 0 limit of the renormalized elliptic gamma function.
cplx renorm_elliptic_gamma_limit(cplx z, double tau, double tol = 1e-14);

}  // namespace hypbeta
