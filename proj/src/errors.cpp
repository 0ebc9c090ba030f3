#include "hypbeta/errors.hpp"

#include <sstream>

#include "hypbeta/complex.hpp"

namespace hypbeta {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::BaseOutOfRange: return "BaseOutOfRange";
        case ErrorKind::NomeOutOfRange: return "NomeOutOfRange";
        case ErrorKind::DivisionByZeroPole: return "DivisionByZeroPole";
        case ErrorKind::DivergentSeries: return "DivergentSeries";
        case ErrorKind::PoleInLowerParams: return "PoleInLowerParams";
        case ErrorKind::OutsideAnnulus: return "OutsideAnnulus";
        case ErrorKind::OutsideStrip: return "OutsideStrip";
        case ErrorKind::AtPole: return "AtPole";
        case ErrorKind::ShiftOverflow: return "ShiftOverflow";
        case ErrorKind::DegenerateRatio: return "DegenerateRatio";
        case ErrorKind::RegimeUnsupported: return "RegimeUnsupported";
        case ErrorKind::MaxSubdivisions: return "MaxSubdivisions";
        case ErrorKind::NonFiniteSample: return "NonFiniteSample";
        case ErrorKind::NoDecayDetected: return "NoDecayDetected";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::SlowConvergence: return "SlowConvergence";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::UnknownIdentity: return "UnknownIdentity";
        case ErrorKind::PoleNearContour: return "PoleNearContour";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    }
    return "Unknown";
}

bool is_domain_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::BaseOutOfRange:
        case ErrorKind::NomeOutOfRange:
        case ErrorKind::OutsideAnnulus:
        case ErrorKind::OutsideStrip:
        case ErrorKind::AtPole:
        case ErrorKind::DegenerateRatio:
        case ErrorKind::RegimeUnsupported:
        case ErrorKind::ParameterOutOfRange:
        case ErrorKind::DomainViolation:
        case ErrorKind::PoleNearContour:
        case ErrorKind::PoleInLowerParams:
        case ErrorKind::DivisionByZeroPole:
        case ErrorKind::DivergentSeries:
            return true;
        default:
            return false;
    }
}

static std::string describe(const std::string& c, double v, double b) {
    std::ostringstream os;
    os.precision(6);
    os << "domain violation: " << c << " (value " << v << ", bound " << b << ")";
    return os.str();
}

DomainViolation::DomainViolation(std::string constraint, double value, double bound)
    : Error(ErrorKind::DomainViolation, describe(constraint, value, bound)),
      constraint_(std::move(constraint)),
      value_(value),
      bound_(bound) {}

void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

cplx LogValue::value() const {
    if (order > 0) return {0.0, 0.0};
    if (order < 0) raise(ErrorKind::AtPole, "product has a pole of order " + std::to_string(-order));
    return std::exp(log);
}

LogValue log_one_minus_exp(cplx w) {
    // reduce the phase so that e^w near 1 is recognised
    double t = std::remainder(w.imag(), 2.0 * pi);
    const cplx wr{w.real(), t};
    if (w.real() > 30.0) {
        // 1 - e^w = -e^w (1 - e^{-w})
        return {wr + cplx(0.0, pi) + log1p(-std::exp(-wr)), 0};
    }
    const cplx f = -expm1(wr);
    if (std::abs(f) < zero_factor_tol * (1.0 + std::exp(w.real()))) return {{0.0, 0.0}, 1};
    if (std::abs(wr) > 0.5 && w.real() < -0.7) return {log1p(-std::exp(wr)), 0};
    return {std::log(f), 0};
}

LogValue log_one_minus(cplx x) {
    const cplx f = 1.0 - x;
    if (std::abs(f) < zero_factor_tol * (1.0 + std::abs(x))) return {{0.0, 0.0}, 1};
    if (std::abs(x) < 0.5) return {log1p(-x), 0};
    return {std::log(f), 0};
}

}  // namespace hypbeta
