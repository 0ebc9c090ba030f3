#pragma once

#include "hypbeta/complex.hpp"

namespace hypbeta {

enum class Regime { trigonometric, hyperbolic };

// Deformation parameter with bases q = e^{2 pi i tau}, qt = e^{-2 pi i/tau}.
// Immutable after construction.
class TauParameter {
public:
    // Trigonometric when Im tau > 0, hyperbolic when Im tau == 0 and Re tau < 0.
    explicit TauParameter(cplx tau);
    // Forces a regime; hyperbolic needs Re tau < 0 and Im tau >= 0.
    TauParameter(cplx tau, Regime regime);

    cplx tau() const { return tau_; }
    cplx q() const { return q_; }
    cplx qtilde() const { return qt_; }
    Regime regime() const { return regime_; }

    // q^u = exp(2 pi i tau u), qt^u = exp(-2 pi i u / tau)
    cplx log_q_pow(cplx u) const { return two_pi_i * tau_ * u; }
    cplx log_qt_pow(cplx u) const { return -two_pi_i * u / tau_; }
    cplx q_pow(cplx u) const { return std::exp(log_q_pow(u)); }
    cplx qt_pow(cplx u) const { return std::exp(log_qt_pow(u)); }

    // principal sqrt(-i tau)
    cplx sqrt_mit() const { return sqrt_mit_; }
    // q^{-1/24} qt^{1/24}
    cplx modular_k() const { return k_; }
    cplx log_modular_k() const { return log_k_; }

private:
    void init();
    cplx tau_, q_, qt_;
    Regime regime_;
    cplx sqrt_mit_, k_, log_k_;
};

}  // namespace hypbeta
