#pragma once

#include <stdexcept>
#include <string>

namespace hypbeta {

enum class ErrorKind {
    BaseOutOfRange,
    NomeOutOfRange,
    DivisionByZeroPole,
    DivergentSeries,
    PoleInLowerParams,
    OutsideAnnulus,
    OutsideStrip,
    AtPole,
    ShiftOverflow,
    DegenerateRatio,
    RegimeUnsupported,
    MaxSubdivisions,
    NonFiniteSample,
    NoDecayDetected,
    ParameterOutOfRange,
    SlowConvergence,
    DomainViolation,
    UnknownIdentity,
    PoleNearContour,
    QuadratureFailure,
};

const char* to_string(ErrorKind k);

// True for errors caused by the caller's input rather than by numerics.
bool is_domain_error(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class DomainViolation : public Error {
public:
    DomainViolation(std::string constraint, double value, double bound);
    const std::string& constraint() const { return constraint_; }
    double value() const { return value_; }
    double bound() const { return bound_; }

private:
    std::string constraint_;
    double value_;
    double bound_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace hypbeta
