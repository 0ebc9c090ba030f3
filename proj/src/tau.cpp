#include "hypbeta/tau.hpp"

#include "hypbeta/errors.hpp"

namespace hypbeta {

TauParameter::TauParameter(cplx tau) : tau_(tau) {
    if (tau.imag() > 0.0)
        regime_ = Regime::trigonometric;
    else if (tau.imag() == 0.0 && tau.real() < 0.0)
        regime_ = Regime::hyperbolic;
    else
        raise(ErrorKind::RegimeUnsupported, "tau must satisfy Im tau > 0, or Im tau = 0 with Re tau < 0");
    init();
}

TauParameter::TauParameter(cplx tau, Regime regime) : tau_(tau), regime_(regime) {
    if (regime == Regime::trigonometric && !(tau.imag() > 0.0))
        raise(ErrorKind::RegimeUnsupported, "trigonometric regime needs Im tau > 0");
    if (regime == Regime::hyperbolic && !(tau.real() < 0.0 && tau.imag() >= 0.0))
        raise(ErrorKind::RegimeUnsupported, "hyperbolic regime needs Re tau < 0 and Im tau >= 0");
    init();
}

void TauParameter::init() {
    q_ = std::exp(two_pi_i * tau_);
    qt_ = std::exp(-two_pi_i / tau_);
    sqrt_mit_ = std::sqrt(-I * tau_);
    log_k_ = -I * pi * (tau_ + 1.0 / tau_) / 12.0;
    k_ = std::exp(log_k_);
}

}  // namespace hypbeta
