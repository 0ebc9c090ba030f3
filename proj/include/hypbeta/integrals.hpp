#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypbeta/complex.hpp"
#include "hypbeta/quadrature.hpp"
#include "hypbeta/tau.hpp"

namespace hypbeta {

enum class IdentityClass { trigonometric, elliptic, hyperbolic, limit, calibration };

const char* to_string(IdentityClass c);

struct IdentityParams {
    cplx tau{0.0, 1.0};
    std::vector<cplx> values;
};

// One inequality of a parameter domain, evaluated as value < bound (or value > bound).
struct Constraint {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool less = true;
    bool ok() const { return less ? value < bound : value > bound; }
};

struct SideValue {
    cplx value{0.0, 0.0};
    double err_est = 0.0;
    long evals = 0;
    double radius = 0.0;
};

// Optional axis-aligned box for random sampling: per-parameter real/imag ranges.
struct SampleBox {
    std::vector<std::array<double, 4>> ranges;  // re_lo, re_hi, im_lo, im_hi
    std::array<double, 4> tau_range{0, 0, 0, 0};
};

struct IdentityDescriptor {
    std::string id;
    std::string title;
    IdentityClass cls = IdentityClass::trigonometric;
    std::vector<std::string> param_names;
    IdentityParams defaults;
    double default_tol = 1e-8;
    bool uses_tau = true;
    std::function<std::vector<Constraint>(const IdentityParams&)> domain;
    std::function<SideValue(const IdentityParams&, double)> lhs;
    std::function<cplx(const IdentityParams&, double)> rhs;
    // throws PoleNearContour when a pole of the integrand sits within 1e-3 of the contour
    std::function<void(const IdentityParams&)> pole_check;
    SampleBox box;
};

struct IdentityReport {
    std::string id;
    IdentityParams params;
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    long evals = 0;
    double wall_ms = 0.0;
    double lhs_err_est = 0.0;
    double truncation_radius = 0.0;
    std::map<std::string, double> diagnostics;
};

const std::vector<IdentityDescriptor>& registry();
// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(const std::string& id);
std::vector<std::string> identity_ids();

// Empty optional when every constraint holds, else the first violated one.
std::optional<Constraint> first_violation(const std::string& id, const IdentityParams& p);
// Throws DomainViolation naming the first violated constraint.
void check_domain(const std::string& id, const IdentityParams& p);

// tol <= 0 selects the identity's default tolerance.
IdentityReport evaluate_identity(const std::string& id, const IdentityParams& p, double tol = 0.0);

// Rejection sampling inside the identity's box; draws failing the domain or the pole
// check are discarded and counted in *rejected. tau_override fixes tau for every draw.
std::vector<IdentityParams> draw_params(const IdentityDescriptor& d, long count, std::uint64_t seed,
                                        std::optional<cplx> tau_override = std::nullopt, long* rejected = nullptr);

// Residue series vs circle quadrature vs closed form for the Ramanujan integral
// with the (q;q) factor included. Needs 1 < |c| < |q^-1/2| and 0 < |d| < |q^-1/2|.
IdentityReport residue_ramanujan(cplx c, cplx d, const TauParameter& tp, double tol = 1e-9);

struct LimitPoint {
    double parameter = 0.0;
    double deviation = 0.0;
    double aux_deviation = -1.0;  // c_r deviation for the elliptic degeneration
};

struct LimitStudy {
    std::string id;
    std::vector<LimitPoint> points;
    bool monotone = false;
    bool aux_monotone = true;
    std::vector<std::string> diagnostics;
};

// schedule: r values (degeneration_ell_to_hyp), Im(tau_0) values (nr_to_aw_limit)
// or epsilon values (etingof_type_limit).
LimitStudy limit_study(const std::string& id, const IdentityParams& p, const std::vector<double>& schedule,
                       double tol = 1e-8);

// Building blocks shared with the tests.
cplx log_gamma(cplx z);
cplx hyper_ramanujan_integrand(cplx z, cplx alpha, cplx beta, const TauParameter& tp);
cplx hyper_aw_integrand(cplx z, const std::vector<cplx>& tj, const TauParameter& tp);
cplx hyper_nr_integrand(cplx z, const std::vector<cplx>& tj, const TauParameter& tp);
cplx hyper_ramanujan_rhs(cplx alpha, cplx beta, const TauParameter& tp);
cplx hyper_aw_rhs(const std::vector<cplx>& tj, const TauParameter& tp);
cplx hyper_nr_rhs(const std::vector<cplx>& tj, const TauParameter& tp);

// Hyperbolic LHS along the real axis; differs from the imaginary-axis value by a sign.
// Needs Im tau > 0, Re tau < 0.
SideValue hyperbolic_real_line_lhs(const std::string& id, const IdentityParams& p, double tol);

// Real-line integral of the fused integrand and [0,1] integral of the folded one.
struct FoldCheck {
    cplx line{0.0, 0.0};
    cplx folded{0.0, 0.0};
    double err = 0.0;
};
FoldCheck fusion_fold_check(const std::string& id, const IdentityParams& p, double tol = 1e-10);

}  // namespace hypbeta
